/* axpy_batch64: axpy kernel, generated from program `axpy` */
/* lambda = 32, omega0 = 16, n = 256, q = 268435399, strategy = karatsuba */
/* launch: 256 threads per block, 1 blocks, batch 64 */
#include <stdint.h>
#include <cuda_runtime.h>

__device__ __forceinline__ void axpy_batch64_body(uint16_t v_alpha0, uint16_t v_alpha1, uint16_t v_x0, uint16_t v_x1, uint16_t v_y0, uint16_t v_y1, uint16_t *out0, uint16_t *out1)
{
    const uint16_t v_q_l1 = (uint16_t)(((uint32_t)0xffc7ull));
    const uint16_t v_q_l1_1 = (uint16_t)(((uint32_t)0xfffull));
    const uint16_t v_mu_l1 = (uint16_t)(((uint32_t)0x1c8ull));
    const uint16_t v_mu_l1_1 = (uint16_t)(((uint32_t)0x8000ull));
    const uint32_t v_t0_l1 = (uint32_t)((uint32_t)v_alpha1 * (uint32_t)v_x1);
    const uint16_t v_t0_l1_1 = (uint16_t)(((uint32_t)v_t0_l1) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_2 = (uint16_t)((uint32_t)v_t0_l1 >> 16);
    const uint32_t v_t0_l1_3 = (uint32_t)((uint32_t)v_alpha0 * (uint32_t)v_x0);
    const uint16_t v_t0_l1_4 = (uint16_t)(((uint32_t)v_t0_l1_3) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_5 = (uint16_t)((uint32_t)v_t0_l1_3 >> 16);
    const uint32_t v_t0_l1_6 = (uint32_t)(((uint32_t)v_alpha1 + (uint32_t)v_alpha0) & ((uint32_t)0x1ffffull));
    const uint16_t v_t0_l1_7 = (uint16_t)(((uint32_t)v_t0_l1_6) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_8 = (uint16_t)((uint32_t)v_t0_l1_6 >> 16);
    const uint32_t v_t0_l1_9 = (uint32_t)(((uint32_t)v_x1 + (uint32_t)v_x0) & ((uint32_t)0x1ffffull));
    const uint16_t v_t0_l1_10 = (uint16_t)(((uint32_t)v_t0_l1_9) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_11 = (uint16_t)((uint32_t)v_t0_l1_9 >> 16);
    const uint32_t v_t0_l1_12 = (uint32_t)((uint32_t)v_t0_l1_7 * (uint32_t)v_t0_l1_10);
    const uint16_t v_t0_l1_13 = (uint16_t)(((uint32_t)v_t0_l1_12) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_14 = (uint16_t)((uint32_t)v_t0_l1_12 >> 16);
    const uint16_t v_t0_l1_15 = (uint16_t)(((uint32_t)0x0ull));
    const uint16_t v_t0_l1_16 = (uint16_t)(v_t0_l1_8 ? v_t0_l1_10 : v_t0_l1_15);
    const uint16_t v_t0_l1_17 = (uint16_t)(((uint32_t)0x0ull));
    const uint16_t v_t0_l1_18 = (uint16_t)(v_t0_l1_11 ? v_t0_l1_7 : v_t0_l1_17);
    const uint16_t v_t0_l1_19 = (uint16_t)((uint32_t)v_t0_l1_8 & (uint32_t)v_t0_l1_11);
    const uint32_t v_t0_l1_20 = (uint32_t)(((uint32_t)v_t0_l1_14 + (uint32_t)v_t0_l1_16 + (uint32_t)v_t0_l1_18) & ((uint32_t)0x3ffffull));
    const uint16_t v_t0_l1_21 = (uint16_t)((uint32_t)v_t0_l1_20 >> 16);
    const uint16_t v_t0_l1_22 = (uint16_t)(((uint32_t)v_t0_l1_20) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_23 = (uint16_t)(((uint32_t)v_t0_l1_19 + (uint32_t)v_t0_l1_21) & ((uint32_t)0x3ull));
    const uint16_t v_t0_l1_24 = (uint16_t)(((uint32_t)v_t0_l1_13 - (uint32_t)v_t0_l1_1) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_25 = (uint16_t)((uint32_t)v_t0_l1_13 < (uint32_t)v_t0_l1_1);
    const uint16_t v_t0_l1_26 = (uint16_t)(((uint32_t)v_t0_l1_22 - (uint32_t)v_t0_l1_2 - (uint32_t)v_t0_l1_25) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_27 = (uint16_t)((uint32_t)v_t0_l1_22 < (uint32_t)v_t0_l1_2);
    const uint16_t v_t0_l1_28 = (uint16_t)((uint32_t)v_t0_l1_22 == (uint32_t)v_t0_l1_2);
    const uint16_t v_t0_l1_29 = (uint16_t)((uint32_t)v_t0_l1_28 & (uint32_t)v_t0_l1_25);
    const uint16_t v_t0_l1_30 = (uint16_t)((uint32_t)v_t0_l1_27 | (uint32_t)v_t0_l1_29);
    const uint16_t v_t0_l1_31 = (uint16_t)(((uint32_t)v_t0_l1_23 - (uint32_t)v_t0_l1_30) & ((uint32_t)0x3ull));
    const uint16_t v_t0_l1_32 = (uint16_t)(((uint32_t)v_t0_l1_24 - (uint32_t)v_t0_l1_4) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_33 = (uint16_t)((uint32_t)v_t0_l1_24 < (uint32_t)v_t0_l1_4);
    const uint16_t v_t0_l1_34 = (uint16_t)(((uint32_t)v_t0_l1_26 - (uint32_t)v_t0_l1_5 - (uint32_t)v_t0_l1_33) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_35 = (uint16_t)((uint32_t)v_t0_l1_26 < (uint32_t)v_t0_l1_5);
    const uint16_t v_t0_l1_36 = (uint16_t)((uint32_t)v_t0_l1_26 == (uint32_t)v_t0_l1_5);
    const uint16_t v_t0_l1_37 = (uint16_t)((uint32_t)v_t0_l1_36 & (uint32_t)v_t0_l1_33);
    const uint16_t v_t0_l1_38 = (uint16_t)((uint32_t)v_t0_l1_35 | (uint32_t)v_t0_l1_37);
    const uint16_t v_t0_l1_39 = (uint16_t)(((uint32_t)v_t0_l1_31 - (uint32_t)v_t0_l1_38) & ((uint32_t)0x1ull));
    const uint32_t v_t0_l1_40 = (uint32_t)(((uint32_t)v_t0_l1_2 + (uint32_t)v_t0_l1_32) & ((uint32_t)0x1ffffull));
    const uint16_t v_t0_l1_41 = (uint16_t)((uint32_t)v_t0_l1_40 >> 16);
    const uint16_t v_t0_l1_42 = (uint16_t)(((uint32_t)v_t0_l1_40) & ((uint32_t)0xffffull));
    const uint32_t v_t0_l1_43 = (uint32_t)(((uint32_t)v_t0_l1_34 + (uint32_t)v_t0_l1_4 + (uint32_t)v_t0_l1_41) & ((uint32_t)0x1ffffull));
    const uint16_t v_t0_l1_44 = (uint16_t)((uint32_t)v_t0_l1_43 >> 16);
    const uint16_t v_t0_l1_45 = (uint16_t)(((uint32_t)v_t0_l1_43) & ((uint32_t)0xffffull));
    const uint16_t v_t0_l1_46 = (uint16_t)(((uint32_t)v_t0_l1_39 + (uint32_t)v_t0_l1_5 + (uint32_t)v_t0_l1_44) & ((uint32_t)0xffffull));
    const uint16_t v_t1_l1 = (uint16_t)(((uint32_t)v_t0_l1_42 >> 10) & ((uint32_t)0x3full));
    const uint16_t v_t1_l1_1 = (uint16_t)(((uint32_t)v_t0_l1_45 << 6) & ((uint32_t)0xffffull));
    const uint16_t v_t1_l1_2 = (uint16_t)((uint32_t)v_t1_l1 | (uint32_t)v_t1_l1_1);
    const uint16_t v_t1_l1_3 = (uint16_t)(((uint32_t)v_t0_l1_45 >> 10) & ((uint32_t)0x3full));
    const uint16_t v_t1_l1_4 = (uint16_t)(((uint32_t)v_t0_l1_46 << 6) & ((uint32_t)0xffffull));
    const uint16_t v_t1_l1_5 = (uint16_t)((uint32_t)v_t1_l1_3 | (uint32_t)v_t1_l1_4);
    const uint32_t v_t2_l1 = (uint32_t)((uint32_t)v_t1_l1_2 * (uint32_t)v_mu_l1);
    const uint16_t v_t2_l1_1 = (uint16_t)(((uint32_t)v_t2_l1) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_2 = (uint16_t)((uint32_t)v_t2_l1 >> 16);
    const uint32_t v_t2_l1_3 = (uint32_t)((uint32_t)v_t1_l1_5 * (uint32_t)v_mu_l1_1);
    const uint16_t v_t2_l1_4 = (uint16_t)(((uint32_t)v_t2_l1_3) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_5 = (uint16_t)((uint32_t)v_t2_l1_3 >> 16);
    const uint32_t v_t2_l1_6 = (uint32_t)(((uint32_t)v_t1_l1_2 + (uint32_t)v_t1_l1_5) & ((uint32_t)0x1ffffull));
    const uint16_t v_t2_l1_7 = (uint16_t)(((uint32_t)v_t2_l1_6) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_8 = (uint16_t)((uint32_t)v_t2_l1_6 >> 16);
    const uint16_t v_t2_l1_10 = (uint16_t)(((uint32_t)0x81c8ull));
    const uint32_t v_t2_l1_12 = (uint32_t)((uint32_t)v_t2_l1_7 * (uint32_t)v_t2_l1_10);
    const uint16_t v_t2_l1_13 = (uint16_t)(((uint32_t)v_t2_l1_12) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_14 = (uint16_t)((uint32_t)v_t2_l1_12 >> 16);
    const uint16_t v_t2_l1_15 = (uint16_t)(((uint32_t)0x0ull));
    const uint16_t v_t2_l1_16 = (uint16_t)(v_t2_l1_8 ? v_t2_l1_10 : v_t2_l1_15);
    const uint32_t v_t2_l1_20 = (uint32_t)(((uint32_t)v_t2_l1_14 + (uint32_t)v_t2_l1_16) & ((uint32_t)0x3ffffull));
    const uint16_t v_t2_l1_21 = (uint16_t)((uint32_t)v_t2_l1_20 >> 16);
    const uint16_t v_t2_l1_22 = (uint16_t)(((uint32_t)v_t2_l1_20) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_24 = (uint16_t)(((uint32_t)v_t2_l1_13 - (uint32_t)v_t2_l1_1) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_25 = (uint16_t)((uint32_t)v_t2_l1_13 < (uint32_t)v_t2_l1_1);
    const uint16_t v_t2_l1_26 = (uint16_t)(((uint32_t)v_t2_l1_22 - (uint32_t)v_t2_l1_2 - (uint32_t)v_t2_l1_25) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_27 = (uint16_t)((uint32_t)v_t2_l1_22 < (uint32_t)v_t2_l1_2);
    const uint16_t v_t2_l1_28 = (uint16_t)((uint32_t)v_t2_l1_22 == (uint32_t)v_t2_l1_2);
    const uint16_t v_t2_l1_29 = (uint16_t)((uint32_t)v_t2_l1_28 & (uint32_t)v_t2_l1_25);
    const uint16_t v_t2_l1_30 = (uint16_t)((uint32_t)v_t2_l1_27 | (uint32_t)v_t2_l1_29);
    const uint16_t v_t2_l1_31 = (uint16_t)(((uint32_t)v_t2_l1_21 - (uint32_t)v_t2_l1_30) & ((uint32_t)0x3ull));
    const uint16_t v_t2_l1_32 = (uint16_t)(((uint32_t)v_t2_l1_24 - (uint32_t)v_t2_l1_4) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_33 = (uint16_t)((uint32_t)v_t2_l1_24 < (uint32_t)v_t2_l1_4);
    const uint16_t v_t2_l1_34 = (uint16_t)(((uint32_t)v_t2_l1_26 - (uint32_t)v_t2_l1_5 - (uint32_t)v_t2_l1_33) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_35 = (uint16_t)((uint32_t)v_t2_l1_26 < (uint32_t)v_t2_l1_5);
    const uint16_t v_t2_l1_36 = (uint16_t)((uint32_t)v_t2_l1_26 == (uint32_t)v_t2_l1_5);
    const uint16_t v_t2_l1_37 = (uint16_t)((uint32_t)v_t2_l1_36 & (uint32_t)v_t2_l1_33);
    const uint16_t v_t2_l1_38 = (uint16_t)((uint32_t)v_t2_l1_35 | (uint32_t)v_t2_l1_37);
    const uint16_t v_t2_l1_39 = (uint16_t)(((uint32_t)v_t2_l1_31 - (uint32_t)v_t2_l1_38) & ((uint32_t)0x1ull));
    const uint32_t v_t2_l1_40 = (uint32_t)(((uint32_t)v_t2_l1_2 + (uint32_t)v_t2_l1_32) & ((uint32_t)0x1ffffull));
    const uint16_t v_t2_l1_41 = (uint16_t)((uint32_t)v_t2_l1_40 >> 16);
    const uint32_t v_t2_l1_43 = (uint32_t)(((uint32_t)v_t2_l1_34 + (uint32_t)v_t2_l1_4 + (uint32_t)v_t2_l1_41) & ((uint32_t)0x1ffffull));
    const uint16_t v_t2_l1_44 = (uint16_t)((uint32_t)v_t2_l1_43 >> 16);
    const uint16_t v_t2_l1_45 = (uint16_t)(((uint32_t)v_t2_l1_43) & ((uint32_t)0xffffull));
    const uint16_t v_t2_l1_46 = (uint16_t)(((uint32_t)v_t2_l1_39 + (uint32_t)v_t2_l1_5 + (uint32_t)v_t2_l1_44) & ((uint32_t)0xffffull));
    const uint16_t v_t3_l1 = (uint16_t)(((uint32_t)v_t2_l1_45 >> 1) & ((uint32_t)0x7fffull));
    const uint16_t v_t3_l1_1 = (uint16_t)(((uint32_t)v_t2_l1_46 << 15) & ((uint32_t)0xffffull));
    const uint16_t v_t3_l1_2 = (uint16_t)((uint32_t)v_t3_l1 | (uint32_t)v_t3_l1_1);
    const uint16_t v_t3_l1_3 = (uint16_t)(((uint32_t)v_t2_l1_46 >> 1) & ((uint32_t)0x7fffull));
    const uint32_t v_t4_l1 = (uint32_t)((uint32_t)v_t3_l1_2 * (uint32_t)v_q_l1);
    const uint16_t v_t4_l1_1 = (uint16_t)(((uint32_t)v_t4_l1) & ((uint32_t)0xffffull));
    const uint16_t v_t4_l1_2 = (uint16_t)((uint32_t)v_t4_l1 >> 16);
    const uint32_t v_t4_l1_3 = (uint32_t)((uint32_t)v_t3_l1_3 * (uint32_t)v_q_l1_1);
    const uint16_t v_t4_l1_4 = (uint16_t)(((uint32_t)v_t4_l1_3) & ((uint32_t)0xffffull));
    const uint32_t v_t4_l1_6 = (uint32_t)(((uint32_t)v_t3_l1_2 + (uint32_t)v_t3_l1_3) & ((uint32_t)0x1ffffull));
    const uint16_t v_t4_l1_7 = (uint16_t)(((uint32_t)v_t4_l1_6) & ((uint32_t)0xffffull));
    const uint16_t v_t4_l1_10 = (uint16_t)(((uint32_t)0xfc6ull));
    const uint32_t v_t4_l1_12 = (uint32_t)((uint32_t)v_t4_l1_7 * (uint32_t)v_t4_l1_10);
    const uint16_t v_t4_l1_13 = (uint16_t)(((uint32_t)v_t4_l1_12) & ((uint32_t)0xffffull));
    const uint16_t v_t4_l1_24 = (uint16_t)(((uint32_t)v_t4_l1_13 - (uint32_t)v_t4_l1_1) & ((uint32_t)0xffffull));
    const uint16_t v_t4_l1_32 = (uint16_t)(((uint32_t)v_t4_l1_24 - (uint32_t)v_t4_l1_4) & ((uint32_t)0xffffull));
    const uint32_t v_t4_l1_40 = (uint32_t)(((uint32_t)v_t4_l1_2 + (uint32_t)v_t4_l1_32) & ((uint32_t)0x1ffffull));
    const uint16_t v_t4_l1_42 = (uint16_t)(((uint32_t)v_t4_l1_40) & ((uint32_t)0xffffull));
    const uint16_t v_t7_l1 = (uint16_t)(((uint32_t)v_t0_l1_1 - (uint32_t)v_t4_l1_1) & ((uint32_t)0xffffull));
    const uint16_t v_t7_l1_1 = (uint16_t)((uint32_t)v_t0_l1_1 < (uint32_t)v_t4_l1_1);
    const uint16_t v_t7_l1_2 = (uint16_t)(((uint32_t)v_t0_l1_42 - (uint32_t)v_t4_l1_42 - (uint32_t)v_t7_l1_1) & ((uint32_t)0xffffull));
    const uint16_t v_t8_l1 = (uint16_t)((uint32_t)v_t7_l1 < (uint32_t)v_q_l1);
    const uint16_t v_t8_l1_1 = (uint16_t)((uint32_t)v_t7_l1_2 < (uint32_t)v_q_l1_1);
    const uint16_t v_t8_l1_2 = (uint16_t)((uint32_t)v_t7_l1_2 == (uint32_t)v_q_l1_1);
    const uint16_t v_t8_l1_3 = (uint16_t)((uint32_t)v_t8_l1_2 & (uint32_t)v_t8_l1);
    const uint16_t v_t8_l1_4 = (uint16_t)((uint32_t)v_t8_l1_1 | (uint32_t)v_t8_l1_3);
    const uint16_t v_t9_l1 = (uint16_t)(((uint32_t)v_t7_l1 - (uint32_t)v_q_l1) & ((uint32_t)0xffffull));
    const uint16_t v_t9_l1_1 = (uint16_t)((uint32_t)v_t7_l1 < (uint32_t)v_q_l1);
    const uint16_t v_t9_l1_2 = (uint16_t)(((uint32_t)v_t7_l1_2 - (uint32_t)v_q_l1_1 - (uint32_t)v_t9_l1_1) & ((uint32_t)0xffffull));
    const uint16_t v_t10_l1 = (uint16_t)(v_t8_l1_4 ? v_t7_l1 : v_t9_l1);
    const uint16_t v_t10_l1_1 = (uint16_t)(v_t8_l1_4 ? v_t7_l1_2 : v_t9_l1_2);
    const uint32_t v_t11_l1 = (uint32_t)(((uint32_t)v_t10_l1 + (uint32_t)v_y1) & ((uint32_t)0x1ffffull));
    const uint16_t v_t11_l1_1 = (uint16_t)((uint32_t)v_t11_l1 >> 16);
    const uint16_t v_t11_l1_2 = (uint16_t)(((uint32_t)v_t11_l1) & ((uint32_t)0xffffull));
    const uint32_t v_t11_l1_3 = (uint32_t)(((uint32_t)v_t10_l1_1 + (uint32_t)v_y0 + (uint32_t)v_t11_l1_1) & ((uint32_t)0x1ffffull));
    const uint16_t v_t11_l1_4 = (uint16_t)((uint32_t)v_t11_l1_3 >> 16);
    const uint16_t v_t11_l1_5 = (uint16_t)(((uint32_t)v_t11_l1_3) & ((uint32_t)0xffffull));
    const uint16_t v_t12_l1 = (uint16_t)((uint32_t)v_t11_l1_2 < (uint32_t)v_q_l1);
    const uint16_t v_t12_l1_1 = (uint16_t)((uint32_t)v_t11_l1_5 < (uint32_t)v_q_l1_1);
    const uint16_t v_t12_l1_2 = (uint16_t)((uint32_t)v_t11_l1_5 == (uint32_t)v_q_l1_1);
    const uint16_t v_t12_l1_3 = (uint16_t)((uint32_t)v_t12_l1_2 & (uint32_t)v_t12_l1);
    const uint16_t v_t12_l1_4 = (uint16_t)((uint32_t)v_t12_l1_1 | (uint32_t)v_t12_l1_3);
    const uint16_t v_t12_l1_5 = (uint16_t)(((uint32_t)0x0ull));
    const uint16_t v_t12_l1_7 = (uint16_t)((uint32_t)v_t11_l1_4 == (uint32_t)v_t12_l1_5);
    const uint16_t v_t12_l1_8 = (uint16_t)((uint32_t)v_t12_l1_7 & (uint32_t)v_t12_l1_4);
    const uint16_t v_t14_l1 = (uint16_t)(((uint32_t)v_t11_l1_2 - (uint32_t)v_q_l1) & ((uint32_t)0xffffull));
    const uint16_t v_t14_l1_1 = (uint16_t)((uint32_t)v_t11_l1_2 < (uint32_t)v_q_l1);
    const uint16_t v_t14_l1_2 = (uint16_t)(((uint32_t)v_t11_l1_5 - (uint32_t)v_q_l1_1 - (uint32_t)v_t14_l1_1) & ((uint32_t)0xffffull));
    const uint16_t v_t15_l1 = (uint16_t)(v_t12_l1_8 ? v_t11_l1_2 : v_t14_l1);
    const uint16_t v_t15_l1_1 = (uint16_t)(v_t12_l1_8 ? v_t11_l1_5 : v_t14_l1_2);
    *out0 = v_t15_l1_1;
    *out1 = v_t15_l1;
}

__global__ void axpy_batch64(const uint16_t *__restrict__ alpha, const uint16_t *__restrict__ x, const uint16_t *__restrict__ y, uint16_t *__restrict__ r, unsigned n)
{
    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;
    const size_t batch = blockIdx.y;
    if (tid < n) {
        const size_t e = batch * n + tid;
        axpy_batch64_body(alpha[batch * 2 + 0], alpha[batch * 2 + 1], x[e * 2 + 0], x[e * 2 + 1], y[e * 2 + 0], y[e * 2 + 1], &r[e * 2 + 0], &r[e * 2 + 1]);
    }
}

void axpy_batch64_launch(const uint16_t *alpha, const uint16_t *x, const uint16_t *y, uint16_t *r, unsigned batch, cudaStream_t stream)
{
    const dim3 block(256);
    const dim3 grid(1, batch);
    axpy_batch64<<<grid, block, 0, stream>>>(alpha, x, y, r, 256u);
}
