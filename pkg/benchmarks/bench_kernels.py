"""Time the numpy and numba kernel sets on the numeric channel's hot paths.

    python3 benchmarks/bench_kernels.py [--sizes 32,64,128,256] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from toeplitz_minors import _kernels
from toeplitz_minors.partitions import Partition
from toeplitz_minors.symfunc import SymbolSpec
from toeplitz_minors.toeplitz_numeric import d_coeffs, minor_matrix

SPEC = SymbolSpec([0.6 + 0.1j, 0.2, -0.05], [0.6 - 0.1j, 0.2, -0.05])
LAM, MU = Partition([2, 1]), Partition([1])


def cases(n):
    p = np.asarray(SPEC.p, dtype=np.complex128)
    fd = d_coeffs(SPEC, n + 40)
    matrix = np.ascontiguousarray(minor_matrix(fd, LAM, MU, n))
    return {
        "h_recurrence": lambda k: k.h_recurrence(p, 4 * n),
        "d_convolution": lambda k: k.d_convolution(fd.h, fd.h_tilde),
        "lu_logdet": lambda k: k.lu_logdet(matrix),
    }


def best_of(fn, repeat):
    fn()  # warm-up, includes JIT compilation
    number = 20
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="32,64,128,256")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    kernel_sets = [_kernels.NUMPY_KERNELS]
    if _kernels.NUMBA_KERNELS is None:
        print("numba not installed; timing the numpy kernels only")
    else:
        kernel_sets.append(_kernels.NUMBA_KERNELS)

    header = f"{'kernel':<14}{'n':>6}" + "".join(f"{k.name + ' (us)':>16}" for k in kernel_sets)
    if len(kernel_sets) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for n in (int(s) for s in args.sizes.split(",")):
        for name, call in cases(n).items():
            times = [best_of(lambda k=k: call(k), args.repeat) for k in kernel_sets]
            line = f"{name:<14}{n:>6}" + "".join(f"{t * 1e6:>16.1f}" for t in times)
            if len(times) == 2:
                line += f"{times[0] / times[1]:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
