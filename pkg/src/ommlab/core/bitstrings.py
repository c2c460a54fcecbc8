# -*- coding: utf-8 -*-
#
# bitstrings.py
#
# This file is part of ommlab.
#
# Copyright (C) 2026 The ommlab developers
#
# ommlab is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# ommlab is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with ommlab.  If not, see <http://www.gnu.org/licenses/>.

import numpy as np
import numpy.typing as npt

from typing import Iterable, Optional, Sequence, Union


MAX_ENUMERATION_LENGTH = 20


def split_seed(master: int, *keys: int) -> int:
    """
    Derive the seed of an independent stream from a master seed.

    The split feeds the master seed as entropy and the keys as spawn key
    to `numpy.random.SeedSequence` and draws a single 64-bit word from it.
    For experiment trials the keys are `(cell_index, trial_index)`.

    Parameters
    ----------
    master: int
        The master seed, in [0, 2**64)
    keys: int
        Non-negative integers identifying the stream

    Returns
    -------
    int
        The stream seed, in [0, 2**64)
    """
    master = int(master)
    if master < 0 or master >= 2**64:
        raise ValueError(f"Master seed {master} is not a 64-bit unsigned integer")
    if any(int(key) < 0 for key in keys):
        raise ValueError(f"Seed split keys {keys} must be non-negative")
    seq = np.random.SeedSequence(master, spawn_key=tuple(int(key) for key in keys))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


class RngStream:
    """
    Seeded random stream, a PCG64 generator (128 bit state) that remembers
    the seed it was created from.

    A stream has a single owner. Two streams created from the same seed
    produce the same draws for any sequence of calls.
    """

    def __init__(self, seed: int):
        seed = int(seed)
        if seed < 0 or seed >= 2**64:
            raise ValueError(f"Seed {seed} is not a 64-bit unsigned integer")
        self.seed = seed
        self.generator = np.random.Generator(np.random.PCG64(seed))

    def __repr__(self):
        return f"RngStream(seed={self.seed})"

    def spawn(self, *keys: int) -> "RngStream":
        return RngStream(split_seed(self.seed, *keys))

    def index(self, n: int) -> int:
        """Uniform integer in [0, n)"""
        return int(self.generator.integers(n))

    def integers(self, low, high=None, size=None):
        return self.generator.integers(low, high, size=size)

    def random(self, size=None):
        return self.generator.random(size)

    def choice(self, items: Sequence):
        """Uniformly chosen element of a non-empty sequence"""
        if len(items) == 0:
            raise ValueError("Cannot choose from an empty sequence")
        return items[self.index(len(items))]


class BitString:
    """
    Immutable fixed-length binary vector.

    Positions are addressed 1-based in the public interface (`bit`,
    `count_ones`, `flip`), the underlying storage is a read-only `uint8`
    numpy array.

    Parameters
    ----------
    bits: iterable of int or str
        The bit values, each 0 or 1. A string such as `"0110"` is parsed
        character by character.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Union[str, Iterable[int], npt.ArrayLike]):
        if isinstance(bits, str):
            bits = [_parse_bit_char(c) for c in bits.strip()]
        arr = np.array(bits, dtype=np.int64)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("A bitstring is a non-empty one-dimensional sequence")
        if not np.all((arr == 0) | (arr == 1)):
            raise ValueError(f"Bit values must be 0 or 1, got {np.unique(arr)}")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self._bits = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "BitString":
        # internal constructor for arrays known to be valid uint8 0/1 vectors
        obj = object.__new__(cls)
        arr.setflags(write=False)
        obj._bits = arr
        return obj

    @classmethod
    def from_string(cls, string: str) -> "BitString":
        return cls(string)

    @classmethod
    def ones(cls, n: int) -> "BitString":
        return cls._wrap(np.ones(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, n: int) -> "BitString":
        return cls._wrap(np.zeros(n, dtype=np.uint8))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def n(self) -> int:
        return self._bits.shape[0]

    def __len__(self):
        return self._bits.shape[0]

    def bit(self, i: int) -> int:
        if i < 1 or i > self.n:
            raise IndexError(f"Bit position {i} outside [1, {self.n}]")
        return int(self._bits[i - 1])

    def flip(self, positions: Iterable[int]) -> "BitString":
        """Copy with the given 1-based positions flipped"""
        idx = np.array(list(positions), dtype=np.int64)
        if idx.size and (idx.min() < 1 or idx.max() > self.n):
            raise IndexError(f"Flip positions {idx} outside [1, {self.n}]")
        arr = self._bits.copy()
        arr[idx - 1] ^= 1
        return BitString._wrap(arr)

    def hamming(self, other: "BitString") -> int:
        if other.n != self.n:
            raise ValueError(f"Length mismatch: {self.n} vs {other.n}")
        return int(np.count_nonzero(self._bits != other._bits))

    def __eq__(self, other):
        if not isinstance(other, BitString):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self):
        return hash((self.n, self._bits.tobytes()))

    def __str__(self):
        return "".join("1" if b else "0" for b in self._bits)

    def __repr__(self):
        return f"BitString('{self}')"


def _parse_bit_char(char: str) -> int:
    if char not in ("0", "1"):
        raise ValueError(f"Invalid bit character '{char}'")
    return int(char)


def count_ones(x: BitString, a: int, b: int) -> int:
    """
    Number of ones in the positions `a` to `b` (1-based, inclusive)

    Raises
    ------
    IndexError
        If not `1 <= a <= b <= n`
    """
    if not 1 <= a <= b <= x.n:
        raise IndexError(f"Invalid range [{a}, {b}] for a bitstring of length {x.n}")
    return int(np.count_nonzero(x.bits[a - 1 : b]))


def one_bit_mutation(
    x: BitString, rng: RngStream, index: Optional[int] = None
) -> BitString:
    """
    Flip exactly one position, chosen uniformly at random

    Parameters
    ----------
    x: `BitString`
        The parent, left unchanged
    rng: `RngStream`
        The random stream
    index: int, optional
        Forces the flipped position (1-based) instead of drawing it

    Returns
    -------
    `BitString`
    """
    if index is None:
        idx = rng.index(x.n)
    else:
        if index < 1 or index > x.n:
            raise IndexError(f"Mutation index {index} outside [1, {x.n}]")
        idx = index - 1
    arr = x.bits.copy()
    arr[idx] ^= 1
    return BitString._wrap(arr)


def standard_bitwise_mutation(x: BitString, rng: RngStream) -> BitString:
    """
    Flip every position independently with probability 1/n. The copy is
    returned even when no bit flips.
    """
    arr = x.bits.copy()
    mask = rng.random(x.n) < 1.0 / x.n
    arr[mask] ^= 1
    return BitString._wrap(arr)


def random_bitstring(n: int, rng: RngStream) -> BitString:
    if n < 1:
        raise ValueError(f"Bitstring length must be positive, got {n}")
    return BitString._wrap(rng.integers(0, 2, size=n).astype(np.uint8))


def enumerate_bitstrings(n: int) -> np.ndarray:
    """
    All 2**n bitstrings of length n as the rows of a `uint8` array, row j
    holding the binary expansion of j with position 1 most significant.
    """
    if n < 1 or n > MAX_ENUMERATION_LENGTH:
        raise ValueError(
            f"Enumeration is restricted to 1 <= n <= {MAX_ENUMERATION_LENGTH}, got {n}"
        )
    codes = np.arange(2**n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
