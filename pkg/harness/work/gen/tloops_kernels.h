#ifndef TLOOPS_KERNELS_H
#define TLOOPS_KERNELS_H

#ifdef __cplusplus
extern "C" {
#endif

void tl_0001(const long N, double* const* L, const double* const* R0);
void tl_0002(const long N, double* const* L, const double* const* R0);
void tl_0003(const long N, double* const* L, const double* const* R0);
void tl_0004(const long N, double* const* L, const double* const* R0, const double* const* R1);
void tl_0005(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2);
void tl_0006(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3);
void tl_0007(const long N, double* const* L, const double* const* R0, const double* const* R1);
void tl_0008(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2);
void tl_0009(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3);
void tl_0010(const long N, double* const* L, const double* const* R0, const double* const* R1);
void tl_0011(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2);
void tl_0012(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3);
void tl_0013(const long N, double* const* L, const double d0, const double* F0, const double* const* R0, const double* const* R1);
void tl_0014(const long N, double* const* L, const double d0, const double* const* R0, const double* const* R1);

#ifdef __cplusplus
}
#endif

#endif /* TLOOPS_KERNELS_H */
