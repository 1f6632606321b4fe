import itertools

from trispec.core import FAMILIES, CentralType, family_params


def sweep(h_max, m_max, classification=False):
    """Every central type with h <= h_max and m <= m_max that can be evaluated."""
    for fam in FAMILIES:
        shape = family_params(fam)
        hs = range(h_max + 1) if "h" in shape else [None]
        ms = range(1, m_max + 1) if "m" in shape else [None]
        es = (1, -1) if "e" in shape else (None,)
        for h, m, e in itertools.product(hs, ms, es):
            try:
                ct = CentralType(fam, h=h, m=m, eps=e)
            except ValueError:
                continue
            if classification and not ct.in_classification_range():
                continue
            yield ct
