#include "tloops_kernels.h"

#if defined(ACCEL_CPU)

void tloops_dispatch_0001(const long N, double* const* L, const double* const* R0)
{
  tl_0001(N, L, R0);
}

#endif /* ACCEL_CPU */
