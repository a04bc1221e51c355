"""Chain-enumeration kernels.

Both backends walk a contiguous range of chain indices and return the number
of valid chains, the number of self-avoiding ones, and a bitmap of the
conformation codes seen. Displacements arrive pre-scaled to integers by a
common denominator, so the arithmetic stays exact in int64.

The numba backend is used when numba imports and ``QLATTICE_DISABLE_NUMBA``
is unset (or "0"); otherwise the pure-numpy path runs.
"""

import os

import numpy as np

_BLOCK = 1 << 16


def _numba_requested():
    return os.environ.get("QLATTICE_DISABLE_NUMBA", "0").strip().lower() in ("", "0", "false", "no")


try:
    if not _numba_requested():
        raise ImportError("numba disabled by QLATTICE_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def census_range_numpy(table, ids, width, turns, radix, start, stop, seen):
    mask = (1 << width) - 1
    shifts = np.array([(turns - 1 - i) * width for i in range(turns)], dtype=np.int64)
    place = radix ** np.arange(turns, dtype=np.int64)
    valid = 0
    avoiding = 0
    for lo in range(start, stop, _BLOCK):
        hi = min(lo + _BLOCK, stop)
        idx = np.arange(lo, hi, dtype=np.int64)
        states = (idx[:, None] >> shifts[None, :]) & mask
        step_ids = ids[states]
        ok = (step_ids >= 0).all(axis=1)
        nvalid = int(ok.sum())
        if not nvalid:
            continue
        valid += nvalid
        states = states[ok]
        step_ids = step_ids[ok]
        beads = np.zeros((nvalid, turns + 1, 3), dtype=np.int64)
        np.cumsum(table[states], axis=1, out=beads[:, 1:, :])
        clash = np.zeros(nvalid, dtype=bool)
        for i in range(turns + 1):
            for j in range(i + 1, turns + 1):
                clash |= (beads[:, i, :] == beads[:, j, :]).all(axis=1)
        avoiding += int(nvalid - clash.sum())
        codes = step_ids @ place
        np.bitwise_or.at(seen, codes >> 3, (1 << (codes & 7)).astype(np.uint8))
    return valid, avoiding


def _census_range_loop(table, ids, width, turns, radix, start, stop, seen):
    mask = (1 << width) - 1
    beads = np.zeros((turns + 1, 3), dtype=np.int64)
    valid = 0
    avoiding = 0
    for b in range(start, stop):
        ok = True
        code = 0
        place = 1
        for i in range(turns):
            s = (b >> ((turns - 1 - i) * width)) & mask
            sid = ids[s]
            if sid < 0:
                ok = False
                break
            code += sid * place
            place *= radix
            for a in range(3):
                beads[i + 1, a] = beads[i, a] + table[s, a]
        if not ok:
            continue
        valid += 1
        seen[code >> 3] |= np.uint8(1 << (code & 7))
        clash = False
        for i in range(turns + 1):
            for j in range(i + 1, turns + 1):
                if (beads[i, 0] == beads[j, 0] and beads[i, 1] == beads[j, 1]
                        and beads[i, 2] == beads[j, 2]):
                    clash = True
                    break
            if clash:
                break
        if not clash:
            avoiding += 1
    return valid, avoiding


if HAVE_NUMBA:
    census_range_numba = njit(nogil=True, cache=True)(_census_range_loop)
else:
    census_range_numba = None


def census_range(table, ids, width, turns, radix, start, stop, seen, backend=None):
    """Count valid / self-avoiding chains with index in ``[start, stop)``.

    ``seen`` (uint8 bitmap over conformation codes) is updated in place.
    """
    backend = backend or BACKEND
    if backend == "numba":
        if census_range_numba is None:
            raise RuntimeError("numba backend requested but unavailable")
        v, a = census_range_numba(table, ids, width, turns, radix, start, stop, seen)
        return int(v), int(a)
    if backend == "numpy":
        return census_range_numpy(table, ids, width, turns, radix, start, stop, seen)
    raise ValueError(f"unknown backend {backend!r}")
