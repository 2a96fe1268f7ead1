/// Process-wide parallelism degree for the OpenMP kernels (default 1).
#pragma once

namespace demroot::runtime {

int jobs();
void set_jobs(int n);

}  // namespace demroot::runtime
