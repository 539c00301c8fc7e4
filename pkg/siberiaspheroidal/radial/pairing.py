"""
Siberia-Spheroidal - R⁽²⁾ from low-order eigenvalue pairing

l-m 偶：R⁽²⁾_{ml} ≈ R⁽¹⁾_{m,l+1}；l-m 奇：R⁽²⁾_{ml} ≈ -R⁽¹⁾_{m,l-1}，导数同理。
For l - m even R⁽²⁾_{ml} ≈ R⁽¹⁾_{m,l+1}; for l - m odd R⁽²⁾_{ml} ≈ -R⁽¹⁾_{m,l-1}.
The derivatives follow the same rule.

Author: siberiah0h
Email: siberiah0h@gmail.com
Technical Blog: www.dataeast.cn
Last Updated: 2026-10-18
"""

from __future__ import annotations

from typing import Optional, Tuple

from ..core.errors import MethodInapplicable
from ..core.scaled import ScaledComplex
from ..eigen.spectrum import EigenRecord
from .results import R1Fragment


def pairing_partner(m: int, l: int) -> int:
    return l + 1 if (l - m) % 2 == 0 else l - 1


def r2_pairing(
    m: int,
    l: int,
    c: complex,
    record: EigenRecord,
    partner: Optional[R1Fragment],
) -> Tuple[ScaledComplex, ScaledComplex]:
    """
    由配对伙伴的 R⁽¹⁾ 得到 R⁽²⁾ / R⁽²⁾ and its derivative from the partner's R⁽¹⁾

    Raises:
        MethodInapplicable: 无配对或伙伴未计算 / no pairing or partner missing
    """
    want = pairing_partner(m, l)
    if record.paired_with is None or record.paired_with != want:
        raise MethodInapplicable("pairing", f"l={l} has no paired eigenvalue at l={want}")
    if partner is None:
        raise MethodInapplicable("pairing", f"R1 for l={want} is not available")
    if (l - m) % 2 == 0:
        return partner.r1, partner.r1p
    return -partner.r1, -partner.r1p
