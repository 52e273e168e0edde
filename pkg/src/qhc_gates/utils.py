"""Helpers for computational-basis labels and parameter checks."""
import itertools
import math

from qhc_gates.exceptions import InvalidParameter


def label_to_index(label):
    """Return the basis index of a bit-string label, read big-endian (``"01"`` -> 1)."""
    if label == "":
        return 0
    return int(label, 2)


def index_to_label(index, width):
    """Return the big-endian bit-string label of ``index`` padded to ``width`` bits."""
    if width == 0:
        return ""
    return format(index, "b").zfill(width)


def hamming_weight(bits):
    """Number of set bits in a tuple of 0/1 integers or a bit string."""
    if isinstance(bits, str):
        return bits.count("1")
    return sum(bits)


def bit_tuples(width):
    """All ``width``-bit input tuples in lexicographic order."""
    return list(itertools.product((0, 1), repeat=width))


def is_bit_string(text):
    return isinstance(text, str) and all(c in "01" for c in text)


def check_finite(**values):
    """Raise ``InvalidParameter`` unless every keyword value is a finite real."""
    for name, value in values.items():
        try:
            ok = math.isfinite(float(value))
        except (TypeError, ValueError):
            ok = False
        if not ok:
            raise InvalidParameter(f"parameter `{name}` must be a finite real number, got {value!r}")
