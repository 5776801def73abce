#ifndef TLOOPS_KERNELS_H
#define TLOOPS_KERNELS_H

#ifdef __cplusplus
extern "C" {
#endif

void tl_0001(const long N, double* const* L, const double* const* R0);

#ifdef __cplusplus
}
#endif

#endif /* TLOOPS_KERNELS_H */
