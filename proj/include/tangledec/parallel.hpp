#ifndef TANGLEDEC_PARALLEL_HPP
#define TANGLEDEC_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tangledec {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace tangledec

#endif // TANGLEDEC_PARALLEL_HPP
