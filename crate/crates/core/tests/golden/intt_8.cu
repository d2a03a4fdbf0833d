/* intt_8: intt kernel, generated from program `butterfly` */
/* lambda = 16, omega0 = 8, n = 8, q = 4073, strategy = karatsuba */
/* launch: 4 threads per block, 1 blocks, batch 1 */
#include <stdint.h>
#include <cuda_runtime.h>

__device__ __forceinline__ void intt_8_butterfly(uint8_t v_u0, uint8_t v_u1, uint8_t v_v0, uint8_t v_v1, uint8_t v_w0, uint8_t v_w1, uint8_t *out0, uint8_t *out1, uint8_t *out2, uint8_t *out3)
{
    const uint8_t v_q_l1 = (uint8_t)(((uint32_t)0xe9ull));
    const uint8_t v_q_l1_1 = (uint8_t)(((uint32_t)0xfull));
    const uint8_t v_mu_l1 = (uint8_t)(((uint32_t)0xb9ull));
    const uint8_t v_mu_l1_1 = (uint8_t)(((uint32_t)0x80ull));
    const uint16_t v_t0_l1 = (uint16_t)((uint32_t)v_w1 * (uint32_t)v_v1);
    const uint8_t v_t0_l1_1 = (uint8_t)(((uint32_t)v_t0_l1) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_2 = (uint8_t)((uint32_t)v_t0_l1 >> 8);
    const uint16_t v_t0_l1_3 = (uint16_t)((uint32_t)v_w0 * (uint32_t)v_v0);
    const uint8_t v_t0_l1_4 = (uint8_t)(((uint32_t)v_t0_l1_3) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_5 = (uint8_t)((uint32_t)v_t0_l1_3 >> 8);
    const uint16_t v_t0_l1_6 = (uint16_t)(((uint32_t)v_w1 + (uint32_t)v_w0) & ((uint32_t)0x1ffull));
    const uint8_t v_t0_l1_7 = (uint8_t)(((uint32_t)v_t0_l1_6) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_8 = (uint8_t)((uint32_t)v_t0_l1_6 >> 8);
    const uint16_t v_t0_l1_9 = (uint16_t)(((uint32_t)v_v1 + (uint32_t)v_v0) & ((uint32_t)0x1ffull));
    const uint8_t v_t0_l1_10 = (uint8_t)(((uint32_t)v_t0_l1_9) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_11 = (uint8_t)((uint32_t)v_t0_l1_9 >> 8);
    const uint16_t v_t0_l1_12 = (uint16_t)((uint32_t)v_t0_l1_7 * (uint32_t)v_t0_l1_10);
    const uint8_t v_t0_l1_13 = (uint8_t)(((uint32_t)v_t0_l1_12) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_14 = (uint8_t)((uint32_t)v_t0_l1_12 >> 8);
    const uint8_t v_t0_l1_15 = (uint8_t)(((uint32_t)0x0ull));
    const uint8_t v_t0_l1_16 = (uint8_t)(v_t0_l1_8 ? v_t0_l1_10 : v_t0_l1_15);
    const uint8_t v_t0_l1_17 = (uint8_t)(((uint32_t)0x0ull));
    const uint8_t v_t0_l1_18 = (uint8_t)(v_t0_l1_11 ? v_t0_l1_7 : v_t0_l1_17);
    const uint8_t v_t0_l1_19 = (uint8_t)((uint32_t)v_t0_l1_8 & (uint32_t)v_t0_l1_11);
    const uint16_t v_t0_l1_20 = (uint16_t)(((uint32_t)v_t0_l1_14 + (uint32_t)v_t0_l1_16 + (uint32_t)v_t0_l1_18) & ((uint32_t)0x3ffull));
    const uint8_t v_t0_l1_21 = (uint8_t)((uint32_t)v_t0_l1_20 >> 8);
    const uint8_t v_t0_l1_22 = (uint8_t)(((uint32_t)v_t0_l1_20) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_23 = (uint8_t)(((uint32_t)v_t0_l1_19 + (uint32_t)v_t0_l1_21) & ((uint32_t)0x3ull));
    const uint8_t v_t0_l1_24 = (uint8_t)(((uint32_t)v_t0_l1_13 - (uint32_t)v_t0_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_25 = (uint8_t)((uint32_t)v_t0_l1_13 < (uint32_t)v_t0_l1_1);
    const uint8_t v_t0_l1_26 = (uint8_t)(((uint32_t)v_t0_l1_22 - (uint32_t)v_t0_l1_2 - (uint32_t)v_t0_l1_25) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_27 = (uint8_t)((uint32_t)v_t0_l1_22 < (uint32_t)v_t0_l1_2);
    const uint8_t v_t0_l1_28 = (uint8_t)((uint32_t)v_t0_l1_22 == (uint32_t)v_t0_l1_2);
    const uint8_t v_t0_l1_29 = (uint8_t)((uint32_t)v_t0_l1_28 & (uint32_t)v_t0_l1_25);
    const uint8_t v_t0_l1_30 = (uint8_t)((uint32_t)v_t0_l1_27 | (uint32_t)v_t0_l1_29);
    const uint8_t v_t0_l1_31 = (uint8_t)(((uint32_t)v_t0_l1_23 - (uint32_t)v_t0_l1_30) & ((uint32_t)0x3ull));
    const uint8_t v_t0_l1_32 = (uint8_t)(((uint32_t)v_t0_l1_24 - (uint32_t)v_t0_l1_4) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_33 = (uint8_t)((uint32_t)v_t0_l1_24 < (uint32_t)v_t0_l1_4);
    const uint8_t v_t0_l1_34 = (uint8_t)(((uint32_t)v_t0_l1_26 - (uint32_t)v_t0_l1_5 - (uint32_t)v_t0_l1_33) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_35 = (uint8_t)((uint32_t)v_t0_l1_26 < (uint32_t)v_t0_l1_5);
    const uint8_t v_t0_l1_36 = (uint8_t)((uint32_t)v_t0_l1_26 == (uint32_t)v_t0_l1_5);
    const uint8_t v_t0_l1_37 = (uint8_t)((uint32_t)v_t0_l1_36 & (uint32_t)v_t0_l1_33);
    const uint8_t v_t0_l1_38 = (uint8_t)((uint32_t)v_t0_l1_35 | (uint32_t)v_t0_l1_37);
    const uint8_t v_t0_l1_39 = (uint8_t)(((uint32_t)v_t0_l1_31 - (uint32_t)v_t0_l1_38) & ((uint32_t)0x1ull));
    const uint16_t v_t0_l1_40 = (uint16_t)(((uint32_t)v_t0_l1_2 + (uint32_t)v_t0_l1_32) & ((uint32_t)0x1ffull));
    const uint8_t v_t0_l1_41 = (uint8_t)((uint32_t)v_t0_l1_40 >> 8);
    const uint8_t v_t0_l1_42 = (uint8_t)(((uint32_t)v_t0_l1_40) & ((uint32_t)0xffull));
    const uint16_t v_t0_l1_43 = (uint16_t)(((uint32_t)v_t0_l1_34 + (uint32_t)v_t0_l1_4 + (uint32_t)v_t0_l1_41) & ((uint32_t)0x1ffull));
    const uint8_t v_t0_l1_44 = (uint8_t)((uint32_t)v_t0_l1_43 >> 8);
    const uint8_t v_t0_l1_45 = (uint8_t)(((uint32_t)v_t0_l1_43) & ((uint32_t)0xffull));
    const uint8_t v_t0_l1_46 = (uint8_t)(((uint32_t)v_t0_l1_39 + (uint32_t)v_t0_l1_5 + (uint32_t)v_t0_l1_44) & ((uint32_t)0xffull));
    const uint8_t v_t1_l1 = (uint8_t)(((uint32_t)v_t0_l1_42 >> 2) & ((uint32_t)0x3full));
    const uint8_t v_t1_l1_1 = (uint8_t)(((uint32_t)v_t0_l1_45 << 6) & ((uint32_t)0xffull));
    const uint8_t v_t1_l1_2 = (uint8_t)((uint32_t)v_t1_l1 | (uint32_t)v_t1_l1_1);
    const uint8_t v_t1_l1_3 = (uint8_t)(((uint32_t)v_t0_l1_45 >> 2) & ((uint32_t)0x3full));
    const uint8_t v_t1_l1_4 = (uint8_t)(((uint32_t)v_t0_l1_46 << 6) & ((uint32_t)0xffull));
    const uint8_t v_t1_l1_5 = (uint8_t)((uint32_t)v_t1_l1_3 | (uint32_t)v_t1_l1_4);
    const uint16_t v_t2_l1 = (uint16_t)((uint32_t)v_t1_l1_2 * (uint32_t)v_mu_l1);
    const uint8_t v_t2_l1_1 = (uint8_t)(((uint32_t)v_t2_l1) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_2 = (uint8_t)((uint32_t)v_t2_l1 >> 8);
    const uint16_t v_t2_l1_3 = (uint16_t)((uint32_t)v_t1_l1_5 * (uint32_t)v_mu_l1_1);
    const uint8_t v_t2_l1_4 = (uint8_t)(((uint32_t)v_t2_l1_3) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_5 = (uint8_t)((uint32_t)v_t2_l1_3 >> 8);
    const uint16_t v_t2_l1_6 = (uint16_t)(((uint32_t)v_t1_l1_2 + (uint32_t)v_t1_l1_5) & ((uint32_t)0x1ffull));
    const uint8_t v_t2_l1_7 = (uint8_t)(((uint32_t)v_t2_l1_6) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_8 = (uint8_t)((uint32_t)v_t2_l1_6 >> 8);
    const uint8_t v_t2_l1_10 = (uint8_t)(((uint32_t)0x39ull));
    const uint8_t v_t2_l1_11 = (uint8_t)(((uint32_t)0x1ull));
    const uint16_t v_t2_l1_12 = (uint16_t)((uint32_t)v_t2_l1_7 * (uint32_t)v_t2_l1_10);
    const uint8_t v_t2_l1_13 = (uint8_t)(((uint32_t)v_t2_l1_12) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_14 = (uint8_t)((uint32_t)v_t2_l1_12 >> 8);
    const uint8_t v_t2_l1_15 = (uint8_t)(((uint32_t)0x0ull));
    const uint8_t v_t2_l1_16 = (uint8_t)(v_t2_l1_8 ? v_t2_l1_10 : v_t2_l1_15);
    const uint8_t v_t2_l1_19 = (uint8_t)((uint32_t)v_t2_l1_8 & (uint32_t)v_t2_l1_11);
    const uint16_t v_t2_l1_20 = (uint16_t)(((uint32_t)v_t2_l1_14 + (uint32_t)v_t2_l1_16 + (uint32_t)v_t2_l1_7) & ((uint32_t)0x3ffull));
    const uint8_t v_t2_l1_21 = (uint8_t)((uint32_t)v_t2_l1_20 >> 8);
    const uint8_t v_t2_l1_22 = (uint8_t)(((uint32_t)v_t2_l1_20) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_23 = (uint8_t)(((uint32_t)v_t2_l1_19 + (uint32_t)v_t2_l1_21) & ((uint32_t)0x3ull));
    const uint8_t v_t2_l1_24 = (uint8_t)(((uint32_t)v_t2_l1_13 - (uint32_t)v_t2_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_25 = (uint8_t)((uint32_t)v_t2_l1_13 < (uint32_t)v_t2_l1_1);
    const uint8_t v_t2_l1_26 = (uint8_t)(((uint32_t)v_t2_l1_22 - (uint32_t)v_t2_l1_2 - (uint32_t)v_t2_l1_25) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_27 = (uint8_t)((uint32_t)v_t2_l1_22 < (uint32_t)v_t2_l1_2);
    const uint8_t v_t2_l1_28 = (uint8_t)((uint32_t)v_t2_l1_22 == (uint32_t)v_t2_l1_2);
    const uint8_t v_t2_l1_29 = (uint8_t)((uint32_t)v_t2_l1_28 & (uint32_t)v_t2_l1_25);
    const uint8_t v_t2_l1_30 = (uint8_t)((uint32_t)v_t2_l1_27 | (uint32_t)v_t2_l1_29);
    const uint8_t v_t2_l1_31 = (uint8_t)(((uint32_t)v_t2_l1_23 - (uint32_t)v_t2_l1_30) & ((uint32_t)0x3ull));
    const uint8_t v_t2_l1_32 = (uint8_t)(((uint32_t)v_t2_l1_24 - (uint32_t)v_t2_l1_4) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_33 = (uint8_t)((uint32_t)v_t2_l1_24 < (uint32_t)v_t2_l1_4);
    const uint8_t v_t2_l1_34 = (uint8_t)(((uint32_t)v_t2_l1_26 - (uint32_t)v_t2_l1_5 - (uint32_t)v_t2_l1_33) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_35 = (uint8_t)((uint32_t)v_t2_l1_26 < (uint32_t)v_t2_l1_5);
    const uint8_t v_t2_l1_36 = (uint8_t)((uint32_t)v_t2_l1_26 == (uint32_t)v_t2_l1_5);
    const uint8_t v_t2_l1_37 = (uint8_t)((uint32_t)v_t2_l1_36 & (uint32_t)v_t2_l1_33);
    const uint8_t v_t2_l1_38 = (uint8_t)((uint32_t)v_t2_l1_35 | (uint32_t)v_t2_l1_37);
    const uint8_t v_t2_l1_39 = (uint8_t)(((uint32_t)v_t2_l1_31 - (uint32_t)v_t2_l1_38) & ((uint32_t)0x1ull));
    const uint16_t v_t2_l1_40 = (uint16_t)(((uint32_t)v_t2_l1_2 + (uint32_t)v_t2_l1_32) & ((uint32_t)0x1ffull));
    const uint8_t v_t2_l1_41 = (uint8_t)((uint32_t)v_t2_l1_40 >> 8);
    const uint16_t v_t2_l1_43 = (uint16_t)(((uint32_t)v_t2_l1_34 + (uint32_t)v_t2_l1_4 + (uint32_t)v_t2_l1_41) & ((uint32_t)0x1ffull));
    const uint8_t v_t2_l1_44 = (uint8_t)((uint32_t)v_t2_l1_43 >> 8);
    const uint8_t v_t2_l1_45 = (uint8_t)(((uint32_t)v_t2_l1_43) & ((uint32_t)0xffull));
    const uint8_t v_t2_l1_46 = (uint8_t)(((uint32_t)v_t2_l1_39 + (uint32_t)v_t2_l1_5 + (uint32_t)v_t2_l1_44) & ((uint32_t)0xffull));
    const uint8_t v_t3_l1 = (uint8_t)(((uint32_t)v_t2_l1_45 >> 1) & ((uint32_t)0x7full));
    const uint8_t v_t3_l1_1 = (uint8_t)(((uint32_t)v_t2_l1_46 << 7) & ((uint32_t)0xffull));
    const uint8_t v_t3_l1_2 = (uint8_t)((uint32_t)v_t3_l1 | (uint32_t)v_t3_l1_1);
    const uint8_t v_t3_l1_3 = (uint8_t)(((uint32_t)v_t2_l1_46 >> 1) & ((uint32_t)0x7full));
    const uint16_t v_t4_l1 = (uint16_t)((uint32_t)v_t3_l1_2 * (uint32_t)v_q_l1);
    const uint8_t v_t4_l1_1 = (uint8_t)(((uint32_t)v_t4_l1) & ((uint32_t)0xffull));
    const uint8_t v_t4_l1_2 = (uint8_t)((uint32_t)v_t4_l1 >> 8);
    const uint16_t v_t4_l1_3 = (uint16_t)((uint32_t)v_t3_l1_3 * (uint32_t)v_q_l1_1);
    const uint8_t v_t4_l1_4 = (uint8_t)(((uint32_t)v_t4_l1_3) & ((uint32_t)0xffull));
    const uint16_t v_t4_l1_6 = (uint16_t)(((uint32_t)v_t3_l1_2 + (uint32_t)v_t3_l1_3) & ((uint32_t)0x1ffull));
    const uint8_t v_t4_l1_7 = (uint8_t)(((uint32_t)v_t4_l1_6) & ((uint32_t)0xffull));
    const uint8_t v_t4_l1_10 = (uint8_t)(((uint32_t)0xf8ull));
    const uint16_t v_t4_l1_12 = (uint16_t)((uint32_t)v_t4_l1_7 * (uint32_t)v_t4_l1_10);
    const uint8_t v_t4_l1_13 = (uint8_t)(((uint32_t)v_t4_l1_12) & ((uint32_t)0xffull));
    const uint8_t v_t4_l1_24 = (uint8_t)(((uint32_t)v_t4_l1_13 - (uint32_t)v_t4_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t4_l1_32 = (uint8_t)(((uint32_t)v_t4_l1_24 - (uint32_t)v_t4_l1_4) & ((uint32_t)0xffull));
    const uint16_t v_t4_l1_40 = (uint16_t)(((uint32_t)v_t4_l1_2 + (uint32_t)v_t4_l1_32) & ((uint32_t)0x1ffull));
    const uint8_t v_t4_l1_42 = (uint8_t)(((uint32_t)v_t4_l1_40) & ((uint32_t)0xffull));
    const uint8_t v_t7_l1 = (uint8_t)(((uint32_t)v_t0_l1_1 - (uint32_t)v_t4_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t7_l1_1 = (uint8_t)((uint32_t)v_t0_l1_1 < (uint32_t)v_t4_l1_1);
    const uint8_t v_t7_l1_2 = (uint8_t)(((uint32_t)v_t0_l1_42 - (uint32_t)v_t4_l1_42 - (uint32_t)v_t7_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t8_l1 = (uint8_t)((uint32_t)v_t7_l1 < (uint32_t)v_q_l1);
    const uint8_t v_t8_l1_1 = (uint8_t)((uint32_t)v_t7_l1_2 < (uint32_t)v_q_l1_1);
    const uint8_t v_t8_l1_2 = (uint8_t)((uint32_t)v_t7_l1_2 == (uint32_t)v_q_l1_1);
    const uint8_t v_t8_l1_3 = (uint8_t)((uint32_t)v_t8_l1_2 & (uint32_t)v_t8_l1);
    const uint8_t v_t8_l1_4 = (uint8_t)((uint32_t)v_t8_l1_1 | (uint32_t)v_t8_l1_3);
    const uint8_t v_t9_l1 = (uint8_t)(((uint32_t)v_t7_l1 - (uint32_t)v_q_l1) & ((uint32_t)0xffull));
    const uint8_t v_t9_l1_1 = (uint8_t)((uint32_t)v_t7_l1 < (uint32_t)v_q_l1);
    const uint8_t v_t9_l1_2 = (uint8_t)(((uint32_t)v_t7_l1_2 - (uint32_t)v_q_l1_1 - (uint32_t)v_t9_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t10_l1 = (uint8_t)(v_t8_l1_4 ? v_t7_l1 : v_t9_l1);
    const uint8_t v_t10_l1_1 = (uint8_t)(v_t8_l1_4 ? v_t7_l1_2 : v_t9_l1_2);
    const uint16_t v_t11_l1 = (uint16_t)(((uint32_t)v_u1 + (uint32_t)v_t10_l1) & ((uint32_t)0x1ffull));
    const uint8_t v_t11_l1_1 = (uint8_t)((uint32_t)v_t11_l1 >> 8);
    const uint8_t v_t11_l1_2 = (uint8_t)(((uint32_t)v_t11_l1) & ((uint32_t)0xffull));
    const uint16_t v_t11_l1_3 = (uint16_t)(((uint32_t)v_u0 + (uint32_t)v_t10_l1_1 + (uint32_t)v_t11_l1_1) & ((uint32_t)0x1ffull));
    const uint8_t v_t11_l1_4 = (uint8_t)((uint32_t)v_t11_l1_3 >> 8);
    const uint8_t v_t11_l1_5 = (uint8_t)(((uint32_t)v_t11_l1_3) & ((uint32_t)0xffull));
    const uint8_t v_t12_l1 = (uint8_t)((uint32_t)v_t11_l1_2 < (uint32_t)v_q_l1);
    const uint8_t v_t12_l1_1 = (uint8_t)((uint32_t)v_t11_l1_5 < (uint32_t)v_q_l1_1);
    const uint8_t v_t12_l1_2 = (uint8_t)((uint32_t)v_t11_l1_5 == (uint32_t)v_q_l1_1);
    const uint8_t v_t12_l1_3 = (uint8_t)((uint32_t)v_t12_l1_2 & (uint32_t)v_t12_l1);
    const uint8_t v_t12_l1_4 = (uint8_t)((uint32_t)v_t12_l1_1 | (uint32_t)v_t12_l1_3);
    const uint8_t v_t12_l1_5 = (uint8_t)(((uint32_t)0x0ull));
    const uint8_t v_t12_l1_7 = (uint8_t)((uint32_t)v_t11_l1_4 == (uint32_t)v_t12_l1_5);
    const uint8_t v_t12_l1_8 = (uint8_t)((uint32_t)v_t12_l1_7 & (uint32_t)v_t12_l1_4);
    const uint8_t v_t14_l1 = (uint8_t)(((uint32_t)v_t11_l1_2 - (uint32_t)v_q_l1) & ((uint32_t)0xffull));
    const uint8_t v_t14_l1_1 = (uint8_t)((uint32_t)v_t11_l1_2 < (uint32_t)v_q_l1);
    const uint8_t v_t14_l1_2 = (uint8_t)(((uint32_t)v_t11_l1_5 - (uint32_t)v_q_l1_1 - (uint32_t)v_t14_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t15_l1 = (uint8_t)(v_t12_l1_8 ? v_t11_l1_2 : v_t14_l1);
    const uint8_t v_t15_l1_1 = (uint8_t)(v_t12_l1_8 ? v_t11_l1_5 : v_t14_l1_2);
    const uint8_t v_t16_l1 = (uint8_t)(((uint32_t)v_u1 - (uint32_t)v_t10_l1) & ((uint32_t)0xffull));
    const uint8_t v_t16_l1_1 = (uint8_t)((uint32_t)v_u1 < (uint32_t)v_t10_l1);
    const uint8_t v_t16_l1_2 = (uint8_t)(((uint32_t)v_u0 - (uint32_t)v_t10_l1_1 - (uint32_t)v_t16_l1_1) & ((uint32_t)0xffull));
    const uint8_t v_t17_l1 = (uint8_t)((uint32_t)v_u1 < (uint32_t)v_t10_l1);
    const uint8_t v_t17_l1_1 = (uint8_t)((uint32_t)v_u0 < (uint32_t)v_t10_l1_1);
    const uint8_t v_t17_l1_2 = (uint8_t)((uint32_t)v_u0 == (uint32_t)v_t10_l1_1);
    const uint8_t v_t17_l1_3 = (uint8_t)((uint32_t)v_t17_l1_2 & (uint32_t)v_t17_l1);
    const uint8_t v_t17_l1_4 = (uint8_t)((uint32_t)v_t17_l1_1 | (uint32_t)v_t17_l1_3);
    const uint16_t v_t18_l1 = (uint16_t)(((uint32_t)v_t16_l1 + (uint32_t)v_q_l1) & ((uint32_t)0x1ffull));
    const uint8_t v_t18_l1_1 = (uint8_t)((uint32_t)v_t18_l1 >> 8);
    const uint8_t v_t18_l1_2 = (uint8_t)(((uint32_t)v_t18_l1) & ((uint32_t)0xffull));
    const uint16_t v_t18_l1_3 = (uint16_t)(((uint32_t)v_t16_l1_2 + (uint32_t)v_q_l1_1 + (uint32_t)v_t18_l1_1) & ((uint32_t)0x1ffull));
    const uint8_t v_t18_l1_5 = (uint8_t)(((uint32_t)v_t18_l1_3) & ((uint32_t)0xffull));
    const uint8_t v_t20_l1 = (uint8_t)(v_t17_l1_4 ? v_t18_l1_2 : v_t16_l1);
    const uint8_t v_t20_l1_1 = (uint8_t)(v_t17_l1_4 ? v_t18_l1_5 : v_t16_l1_2);
    *out0 = v_t15_l1_1;
    *out1 = v_t15_l1;
    *out2 = v_t20_l1_1;
    *out3 = v_t20_l1;
}

__constant__ uint8_t intt_8_twiddles[4][2] = {
    {0x0u, 0x1u},
    {0x4u, 0x7du},
    {0x2u, 0x25u},
    {0xdu, 0xe7u},
};

__global__ void intt_8_bitrev(uint8_t *data)
{
    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;
    uint8_t *a = data + (size_t)blockIdx.y * 16;
    if (tid < 8u) {
        const unsigned j = __brev(tid) >> 29;
        if (tid < j) {
            for (int k = 0; k < 2; ++k) {
                const uint8_t t = a[tid * 2 + k];
                a[tid * 2 + k] = a[j * 2 + k];
                a[j * 2 + k] = t;
            }
        }
    }
}

/* stage 0: 4 butterflies, span 2 */
__global__ void intt_8_stage0(uint8_t *data)
{
    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;
    uint8_t *a = data + (size_t)blockIdx.y * 16;
    if (tid < 4u) {
        const unsigned k = tid % 1u;
        const unsigned i = (tid / 1u) * 2u + k;
        const unsigned j = i + 1u;
        const uint8_t *w = intt_8_twiddles[k * 4u];
        intt_8_butterfly(a[(i) * 2 + 0], a[(i) * 2 + 1], a[(j) * 2 + 0], a[(j) * 2 + 1], w[0], w[1], &a[(i) * 2 + 0], &a[(i) * 2 + 1], &a[(j) * 2 + 0], &a[(j) * 2 + 1]);
    }
}

/* stage 1: 4 butterflies, span 4 */
__global__ void intt_8_stage1(uint8_t *data)
{
    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;
    uint8_t *a = data + (size_t)blockIdx.y * 16;
    if (tid < 4u) {
        const unsigned k = tid % 2u;
        const unsigned i = (tid / 2u) * 4u + k;
        const unsigned j = i + 2u;
        const uint8_t *w = intt_8_twiddles[k * 2u];
        intt_8_butterfly(a[(i) * 2 + 0], a[(i) * 2 + 1], a[(j) * 2 + 0], a[(j) * 2 + 1], w[0], w[1], &a[(i) * 2 + 0], &a[(i) * 2 + 1], &a[(j) * 2 + 0], &a[(j) * 2 + 1]);
    }
}

/* stage 2: 4 butterflies, span 8 */
__global__ void intt_8_stage2(uint8_t *data)
{
    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;
    uint8_t *a = data + (size_t)blockIdx.y * 16;
    if (tid < 4u) {
        const unsigned k = tid % 4u;
        const unsigned i = (tid / 4u) * 8u + k;
        const unsigned j = i + 4u;
        const uint8_t *w = intt_8_twiddles[k * 1u];
        intt_8_butterfly(a[(i) * 2 + 0], a[(i) * 2 + 1], a[(j) * 2 + 0], a[(j) * 2 + 1], w[0], w[1], &a[(i) * 2 + 0], &a[(i) * 2 + 1], &a[(j) * 2 + 0], &a[(j) * 2 + 1]);
    }
}

__global__ void intt_8_scale(uint8_t *data)
{
    const unsigned tid = blockIdx.x * blockDim.x + threadIdx.x;
    uint8_t *a = data + (size_t)blockIdx.y * 16;
    if (tid < 8u) {
        const uint8_t zero[2] = {0x0u, 0x0u};
        const uint8_t scale[2] = {0xdu, 0xecu};
        uint8_t drop[2];
        intt_8_butterfly(zero[0], zero[1], a[(tid) * 2 + 0], a[(tid) * 2 + 1], scale[0], scale[1], &a[(tid) * 2 + 0], &a[(tid) * 2 + 1], &drop[0], &drop[1]);
    }
}

void intt_8_launch(uint8_t *data, unsigned batch, cudaStream_t stream)
{
    const dim3 block(4);
    const dim3 all(2, batch);
    const dim3 half(1, batch);
    intt_8_bitrev<<<all, block, 0, stream>>>(data);
    intt_8_stage0<<<half, block, 0, stream>>>(data);
    intt_8_stage1<<<half, block, 0, stream>>>(data);
    intt_8_stage2<<<half, block, 0, stream>>>(data);
    intt_8_scale<<<all, block, 0, stream>>>(data);
}
