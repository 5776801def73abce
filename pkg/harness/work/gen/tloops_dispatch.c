#include "tloops_kernels.h"

#if defined(ACCEL_CPU)

void tloops_dispatch_0001(const long N, double* const* L, const double* const* R0)
{
  tl_0001(N, L, R0);
}

void tloops_dispatch_0002(const long N, double* const* L, const double* const* R0)
{
  tl_0002(N, L, R0);
}

void tloops_dispatch_0003(const long N, double* const* L, const double* const* R0)
{
  tl_0003(N, L, R0);
}

void tloops_dispatch_0004(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  tl_0004(N, L, R0, R1);
}

void tloops_dispatch_0005(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  tl_0005(N, L, R0, R1, R2);
}

void tloops_dispatch_0006(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  tl_0006(N, L, R0, R1, R2, R3);
}

void tloops_dispatch_0007(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  tl_0007(N, L, R0, R1);
}

void tloops_dispatch_0008(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  tl_0008(N, L, R0, R1, R2);
}

void tloops_dispatch_0009(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  tl_0009(N, L, R0, R1, R2, R3);
}

void tloops_dispatch_0010(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  tl_0010(N, L, R0, R1);
}

void tloops_dispatch_0011(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  tl_0011(N, L, R0, R1, R2);
}

void tloops_dispatch_0012(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  tl_0012(N, L, R0, R1, R2, R3);
}

void tloops_dispatch_0013(const long N, double* const* L, const double d0, const double* F0, const double* const* R0, const double* const* R1)
{
  tl_0013(N, L, d0, F0, R0, R1);
}

void tloops_dispatch_0014(const long N, double* const* L, const double d0, const double* const* R0, const double* const* R1)
{
  tl_0014(N, L, d0, R0, R1);
}

#endif /* ACCEL_CPU */
