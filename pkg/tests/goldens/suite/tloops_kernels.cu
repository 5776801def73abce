#include <cuda_runtime.h>
#include <math.h>

__global__ void g_0001(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0)
{
  const int i = threadIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)) {
    L[i][x] = R0[i][x];
  }
}

int CUDAWrapper_g_0001(const long N, double* const* L, const double* const* R0)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 1;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0001<<<nblocks,blocksize>>>(N, L, R0);
  return 0;
}

__global__ void g_0002(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)) {
    L[i+3*j][x] = R0[i+3*j][x];
  }
}

int CUDAWrapper_g_0002(const long N, double* const* L, const double* const* R0)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0002<<<nblocks,blocksize>>>(N, L, R0);
  return 0;
}

__global__ void g_0003(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const int k = threadIdx.z;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)&&(k<3)) {
    L[i+3*j+9*k][x] = R0[i+3*j+9*k][x];
  }
}

int CUDAWrapper_g_0003(const long N, double* const* L, const double* const* R0)
{
  const int blocksize_x = 32;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 3;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0003<<<nblocks,blocksize>>>(N, L, R0);
  return 0;
}

__global__ void g_0004(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1)
{
  const int i = threadIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)) {
    L[i][x] = (R0[i][x] + R1[i][x]);
  }
}

int CUDAWrapper_g_0004(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 1;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0004<<<nblocks,blocksize>>>(N, L, R0, R1);
  return 0;
}

__global__ void g_0005(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1, const double* const* __restrict__ R2)
{
  const int i = threadIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)) {
    L[i][x] = ((R0[i][x] + R1[i][x]) + R2[i][x]);
  }
}

int CUDAWrapper_g_0005(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 1;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0005<<<nblocks,blocksize>>>(N, L, R0, R1, R2);
  return 0;
}

__global__ void g_0006(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1, const double* const* __restrict__ R2, const double* const* __restrict__ R3)
{
  const int i = threadIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)) {
    L[i][x] = (((R0[i][x] + R1[i][x]) + R2[i][x]) + R3[i][x]);
  }
}

int CUDAWrapper_g_0006(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 1;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0006<<<nblocks,blocksize>>>(N, L, R0, R1, R2, R3);
  return 0;
}

__global__ void g_0007(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)) {
    L[i+3*j][x] = (R0[i][x]*R1[j][x]);
  }
}

int CUDAWrapper_g_0007(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0007<<<nblocks,blocksize>>>(N, L, R0, R1);
  return 0;
}

__global__ void g_0008(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1, const double* const* __restrict__ R2)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const int k = threadIdx.z;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)&&(k<3)) {
    L[i+3*j+9*k][x] = ((R0[i][x]*R1[j][x])*R2[k][x]);
  }
}

int CUDAWrapper_g_0008(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  const int blocksize_x = 32;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 3;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0008<<<nblocks,blocksize>>>(N, L, R0, R1, R2);
  return 0;
}

__global__ void g_0009(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1, const double* const* __restrict__ R2, const double* const* __restrict__ R3)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const int k = threadIdx.z;
  const int l = blockIdx.z;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)&&(k<3)&&(l<3)) {
    L[i+3*j+9*k+27*l][x] = (((R0[i][x]*R1[j][x])*R2[k][x])*R3[l][x]);
  }
}

int CUDAWrapper_g_0009(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  const int blocksize_x = 32;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 3;
  const int nblocks_z = 3;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0009<<<nblocks,blocksize>>>(N, L, R0, R1, R2, R3);
  return 0;
}

__global__ void g_0010(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const int k = threadIdx.z;
  const int l = blockIdx.z;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)&&(k<3)&&(l<3)) {
    L[i+3*j+9*k+27*l][x] = ((R0[i][x]*R1[3*j+9*k+27*l][x]) + (R0[i+3][x]*R1[3*j+9*k+27*l+1][x]) + (R0[i+6][x]*R1[3*j+9*k+27*l+2][x]));
  }
}

int CUDAWrapper_g_0010(const long N, double* const* L, const double* const* R0, const double* const* R1)
{
  const int blocksize_x = 32;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 3;
  const int nblocks_z = 3;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0010<<<nblocks,blocksize>>>(N, L, R0, R1);
  return 0;
}

__global__ void g_0011(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1, const double* const* __restrict__ R2)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const int k = threadIdx.z;
  const int l = blockIdx.z;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)&&(k<3)&&(l<3)) {
    L[i+3*j+9*k+27*l][x] = ((((R0[j][x]*R1[i][x])*R2[9*k+27*l][x]) + ((R0[j+3][x]*R1[i][x])*R2[9*k+27*l+3][x]) + ((R0[j+6][x]*R1[i][x])*R2[9*k+27*l+6][x])) + (((R0[j][x]*R1[i+3][x])*R2[9*k+27*l+1][x]) + ((R0[j+3][x]*R1[i+3][x])*R2[9*k+27*l+4][x]) + ((R0[j+6][x]*R1[i+3][x])*R2[9*k+27*l+7][x])) + (((R0[j][x]*R1[i+6][x])*R2[9*k+27*l+2][x]) + ((R0[j+3][x]*R1[i+6][x])*R2[9*k+27*l+5][x]) + ((R0[j+6][x]*R1[i+6][x])*R2[9*k+27*l+8][x])));
  }
}

int CUDAWrapper_g_0011(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2)
{
  const int blocksize_x = 32;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 3;
  const int nblocks_z = 3;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0011<<<nblocks,blocksize>>>(N, L, R0, R1, R2);
  return 0;
}

__global__ void g_0012(const long N, double* const* __restrict__ L, const double* const* __restrict__ R0, const double* const* __restrict__ R1, const double* const* __restrict__ R2, const double* const* __restrict__ R3)
{
  const int i = threadIdx.y;
  const int j = blockIdx.y;
  const int k = threadIdx.z;
  const int l = blockIdx.z;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(j<3)&&(k<3)&&(l<3)) {
    L[i+3*j+9*k+27*l][x] = ((((((R0[k][x]*R1[j][x])*R2[i][x])*R3[27*l][x]) + (((R0[k+3][x]*R1[j][x])*R2[i][x])*R3[27*l+9][x]) + (((R0[k+6][x]*R1[j][x])*R2[i][x])*R3[27*l+18][x])) + ((((R0[k][x]*R1[j+3][x])*R2[i][x])*R3[27*l+3][x]) + (((R0[k+3][x]*R1[j+3][x])*R2[i][x])*R3[27*l+12][x]) + (((R0[k+6][x]*R1[j+3][x])*R2[i][x])*R3[27*l+21][x])) + ((((R0[k][x]*R1[j+6][x])*R2[i][x])*R3[27*l+6][x]) + (((R0[k+3][x]*R1[j+6][x])*R2[i][x])*R3[27*l+15][x]) + (((R0[k+6][x]*R1[j+6][x])*R2[i][x])*R3[27*l+24][x]))) + (((((R0[k][x]*R1[j][x])*R2[i+3][x])*R3[27*l+1][x]) + (((R0[k+3][x]*R1[j][x])*R2[i+3][x])*R3[27*l+10][x]) + (((R0[k+6][x]*R1[j][x])*R2[i+3][x])*R3[27*l+19][x])) + ((((R0[k][x]*R1[j+3][x])*R2[i+3][x])*R3[27*l+4][x]) + (((R0[k+3][x]*R1[j+3][x])*R2[i+3][x])*R3[27*l+13][x]) + (((R0[k+6][x]*R1[j+3][x])*R2[i+3][x])*R3[27*l+22][x])) + ((((R0[k][x]*R1[j+6][x])*R2[i+3][x])*R3[27*l+7][x]) + (((R0[k+3][x]*R1[j+6][x])*R2[i+3][x])*R3[27*l+16][x]) + (((R0[k+6][x]*R1[j+6][x])*R2[i+3][x])*R3[27*l+25][x]))) + (((((R0[k][x]*R1[j][x])*R2[i+6][x])*R3[27*l+2][x]) + (((R0[k+3][x]*R1[j][x])*R2[i+6][x])*R3[27*l+11][x]) + (((R0[k+6][x]*R1[j][x])*R2[i+6][x])*R3[27*l+20][x])) + ((((R0[k][x]*R1[j+3][x])*R2[i+6][x])*R3[27*l+5][x]) + (((R0[k+3][x]*R1[j+3][x])*R2[i+6][x])*R3[27*l+14][x]) + (((R0[k+6][x]*R1[j+3][x])*R2[i+6][x])*R3[27*l+23][x])) + ((((R0[k][x]*R1[j+6][x])*R2[i+6][x])*R3[27*l+8][x]) + (((R0[k+3][x]*R1[j+6][x])*R2[i+6][x])*R3[27*l+17][x]) + (((R0[k+6][x]*R1[j+6][x])*R2[i+6][x])*R3[27*l+26][x]))));
  }
}

int CUDAWrapper_g_0012(const long N, double* const* L, const double* const* R0, const double* const* R1, const double* const* R2, const double* const* R3)
{
  const int blocksize_x = 32;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 3;
  const int nblocks_z = 3;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0012<<<nblocks,blocksize>>>(N, L, R0, R1, R2, R3);
  return 0;
}

__global__ void g_0013(const long N, double* const* __restrict__ L, const double d0, const double* __restrict__ F0, const double* const* __restrict__ R0, const double* const* __restrict__ R1)
{
  const int j = threadIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(j<3)) {
    for(int i=j; i<3; ++i) {
      L[i+3*j][x] = (((d0*F0[x])*R0[i+3*j][x]) + (R1[i][x]*R1[j][x]));
    }
  }
}

int CUDAWrapper_g_0013(const long N, double* const* L, const double d0, const double* F0, const double* const* R0, const double* const* R1)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 1;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0013<<<nblocks,blocksize>>>(N, L, d0, F0, R0, R1);
  return 0;
}

__global__ void g_0014(const long N, double* const* __restrict__ L, const double d0, const double* const* __restrict__ R0, const double* const* __restrict__ R1)
{
  const int i = threadIdx.y;
  const int k = blockIdx.y;
  const long x = blockIdx.x*blockDim.x + threadIdx.x;
  if ((x<N)&&(i<3)&&(k<3)) {
    for(int j=k; j<3; ++j) {
      L[i+3*j+9*k][x] = (d0*((R0[i][x]*((R1[j+9*k][x] + R1[3*k+9*j][x]) - R1[j+3*k][x])) + (R0[i+3][x]*((R1[j+9*k+3][x] + R1[3*k+9*j+1][x]) - R1[j+3*k+9][x])) + (R0[i+6][x]*((R1[j+9*k+6][x] + R1[3*k+9*j+2][x]) - R1[j+3*k+18][x]))));
    }
  }
}

int CUDAWrapper_g_0014(const long N, double* const* L, const double d0, const double* const* R0, const double* const* R1)
{
  const int blocksize_x = 64;
  if (N > 65535L*blocksize_x) {
    return 1;  /* grid x dimension cannot cover N */
  }
  const int nblocks_x = (int)(N/blocksize_x + (N % blocksize_x ? 1 : 0));
  const int blocksize_y = 3;
  const int nblocks_y = 3;
  const int blocksize_z = 1;
  const int nblocks_z = 1;
  const dim3 blocksize(blocksize_x, blocksize_y, blocksize_z);
  const dim3 nblocks(nblocks_x, nblocks_y, nblocks_z);
  g_0014<<<nblocks,blocksize>>>(N, L, d0, R0, R1);
  return 0;
}
