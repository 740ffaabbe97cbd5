"""
Games as rows of uint64 words, for batched numpy work

A game on n voters has 2^n mask bits, stored little-endian in
max(1, 2^n / 64) words. Row order matches integer order of the masks when
rows are compared from the last word down.
"""
import numpy as np


def words_per_game(n: int) -> int:
    return max(1, (1 << n) // 64)


def ints_to_rows(masks, n: int) -> np.ndarray:
    masks = list(masks)
    width = words_per_game(n)
    if width == 1:
        return np.array(masks, dtype=np.uint64).reshape(-1, 1)
    raw = b"".join(m.to_bytes(8 * width, "little") for m in masks)
    return np.frombuffer(raw, dtype="<u8").reshape(len(masks), width).astype(np.uint64)


def rows_to_ints(rows: np.ndarray) -> list[int]:
    if rows.shape[1] == 1:
        return rows[:, 0].tolist()
    data = np.ascontiguousarray(rows, dtype="<u8")
    return [int.from_bytes(row.tobytes(), "little") for row in data]


def pack_bits(bits: np.ndarray, n: int) -> np.ndarray:
    """(P, 2^n) booleans -> (P, W) uint64 rows"""
    packed = np.packbits(bits, axis=1, bitorder="little")
    width = words_per_game(n)
    short = 8 * width - packed.shape[1]
    if short:
        packed = np.pad(packed, ((0, 0), (0, short)))
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def mask_bits(mask: int, n: int) -> np.ndarray:
    """Winning flag per coalition index"""
    size = 1 << n
    raw = np.frombuffer(mask.to_bytes(max(1, size // 8), "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def unique_rows(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows
    return np.unique(rows, axis=0)


def lexmin_index(rows: np.ndarray) -> int:
    """Index of the row holding the smallest mask"""
    return int(np.lexsort(rows.T)[0])


def source_indices(maps: np.ndarray, n_target: int) -> np.ndarray:
    """For maps (P, m) of source voters to target voters (0-based), the source
    coalition seen by each target coalition: src[p, k] = sum_j bit(k, maps[p, j]) << j"""
    k = np.arange(1 << n_target, dtype=np.int64)[None, :]
    src = np.zeros((maps.shape[0], 1 << n_target), dtype=np.int64)
    for j in range(maps.shape[1]):
        src |= ((k >> maps[:, j][:, None]) & 1) << j
    return src
