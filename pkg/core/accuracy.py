"""
Accuracy - алгебра точності діагностичного тесту
Зв'язок PPV, NPV, чутливості та специфічності за припущення PPV = 1
"""

import logging
from dataclasses import dataclass
from enum import Enum

from core.errors import ConfigError
from utils.config import Config

logger = logging.getLogger(__name__)


def _check_interval(lo: float, hi: float, what: str):
    if not (0.0 <= lo <= hi <= 1.0):
        raise ConfigError(
            f"{what}: потрібно 0 ≤ lo ≤ hi ≤ 1, отримано [{lo}, {hi}]",
            invariant="interval_order",
        )


@dataclass(frozen=True)
class MissRateInterval:
    """[L_d10, U_d10]: межі P(C_d=1 | T_d=1, R_d=0)"""
    lo: float
    hi: float

    def __post_init__(self):
        _check_interval(self.lo, self.hi, "MissRateInterval")

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi


class AccuracyKind(Enum):
    NPV_INTERVAL = 'npv_interval'
    SENSITIVITY_INTERVAL = 'sensitivity_interval'
    DIRECT_MISS_RATE = 'direct_miss_rate'


@dataclass(frozen=True)
class AccuracySpec:
    """Припущення про точність тесту так, як його сформулював користувач"""
    kind: AccuracyKind
    lo: float
    hi: float

    def __post_init__(self):
        _check_interval(self.lo, self.hi, f"AccuracySpec({self.kind.value})")

    @property
    def depends_on_positivity(self) -> bool:
        """Чи залежить інтервал пропусків від P(R_d=1|T_d=1)"""
        return self.kind is AccuracyKind.SENSITIVITY_INTERVAL

    @classmethod
    def from_dict(cls, data: dict) -> 'AccuracySpec':
        try:
            kind = AccuracyKind(data['kind'])
        except (KeyError, ValueError):
            raise ConfigError(f"Невідомий вид точності: {data.get('kind')}",
                              invariant="accuracy_kind") from None
        return cls(kind=kind, lo=float(data['lo']), hi=float(data['hi']))

    def to_dict(self) -> dict:
        return {'kind': self.kind.value, 'lo': self.lo, 'hi': self.hi}


def ppv(sensitivity: float, specificity: float, prevalence: float) -> float:
    """PPV за теоремою Баєса"""
    true_pos = sensitivity * prevalence
    false_pos = (1.0 - specificity) * (1.0 - prevalence)
    if true_pos + false_pos == 0.0:
        raise ValueError("PPV не визначене: немає позитивних результатів")
    return true_pos / (true_pos + false_pos)


def npv(sensitivity: float, specificity: float, prevalence: float) -> float:
    """NPV за теоремою Баєса"""
    true_neg = specificity * (1.0 - prevalence)
    false_neg = (1.0 - sensitivity) * prevalence
    if true_neg + false_neg == 0.0:
        raise ValueError("NPV не визначене: немає негативних результатів")
    return true_neg / (true_neg + false_neg)


def miss_rate_from_npv(npv_lo: float, npv_hi: float) -> MissRateInterval:
    """
    Інтервал пропусків з інтервалу NPV

    Args:
        npv_lo: Нижня межа NPV
        npv_hi: Верхня межа NPV

    Returns:
        [1 − npv_hi, 1 − npv_lo]
    """
    _check_interval(npv_lo, npv_hi, "NPV")
    return MissRateInterval(lo=1.0 - npv_hi, hi=1.0 - npv_lo)


def _miss_rate_at(sensitivity: float, positivity: float) -> float:
    return positivity * (1.0 - sensitivity) / (sensitivity * (1.0 - positivity))


def miss_rate_from_sensitivity(sens_lo: float, sens_hi: float, p_pos_given_tested: float) -> MissRateInterval:
    """
    Інтервал пропусків з інтервалу чутливості за специфічності 1

    m(s) = r(1−s) / (s(1−r)), спадна за s, тому результат [m(sens_hi), m(sens_lo)].
    Якщо r перевищує sens_lo не більше ніж на Config.SENSITIVITY_SLACK,
    значення обрізається до 1 з попередженням.

    Args:
        sens_lo: Нижня межа чутливості (> 0)
        sens_hi: Верхня межа чутливості
        p_pos_given_tested: r = P(R_d=1|T_d=1) (< 1)

    Returns:
        MissRateInterval
    """
    _check_interval(sens_lo, sens_hi, "Чутливість")
    if sens_lo <= 0.0:
        raise ConfigError("Нижня межа чутливості має бути > 0", invariant="sensitivity_positive")
    r = p_pos_given_tested
    if not (0.0 <= r < 1.0):
        raise ConfigError(f"Потрібно 0 ≤ r < 1, отримано r = {r}", invariant="positivity_below_one")
    if r > sens_lo + Config.SENSITIVITY_SLACK:
        raise ConfigError(
            f"r = {r} перевищує нижню межу чутливості {sens_lo}: P(C=1|T=1) = r/s > 1",
            invariant="positivity_le_sensitivity",
        )

    hi = _miss_rate_at(sens_lo, r)
    lo = _miss_rate_at(sens_hi, r)
    if hi > 1.0 or lo > 1.0:
        logger.warning("r = %.6f трохи перевищує чутливість %.6f; інтервал пропусків обрізано до 1",
                       r, sens_lo)
    return MissRateInterval(lo=min(max(lo, 0.0), 1.0), hi=min(max(hi, 0.0), 1.0))


def miss_rate_from_spec(spec: AccuracySpec, p_pos_given_tested: float = None) -> MissRateInterval:
    """
    Єдиний шлях нормалізації AccuracySpec → MissRateInterval

    Для виду sensitivity_interval потрібне значення r на відповідну дату.
    """
    if spec.kind is AccuracyKind.NPV_INTERVAL:
        return miss_rate_from_npv(spec.lo, spec.hi)
    if spec.kind is AccuracyKind.DIRECT_MISS_RATE:
        return MissRateInterval(lo=spec.lo, hi=spec.hi)
    if p_pos_given_tested is None:
        raise ConfigError("Для інтервалу чутливості потрібна P(R_d=1|T_d=1)",
                          invariant="positivity_required")
    return miss_rate_from_sensitivity(spec.lo, spec.hi, p_pos_given_tested)


def ppv_is_one_iff_specificity_one(spec: float, prevalence_tested: float, sensitivity: float = 1.0) -> bool:
    """
    Чи дорівнює PPV одиниці для заданої специфічності

    PPV = 1 тоді й лише тоді, коли специфічність = 1, якщо P(C_d=1|T_d=1) ∈ (0, 1).

    Args:
        spec: Специфічність тесту
        prevalence_tested: P(C_d=1|T_d=1) ∈ (0, 1]
        sensitivity: Чутливість тесту (> 0)

    Returns:
        True, якщо PPV, обчислене за Баєсом, дорівнює 1
    """
    if not (0.0 < prevalence_tested <= 1.0):
        raise ConfigError(
            f"Еквівалентність не застосовна при поширеності {prevalence_tested}",
            invariant="prevalence_positive",
        )
    if not (0.0 < sensitivity <= 1.0) or not (0.0 <= spec <= 1.0):
        raise ConfigError("Чутливість має бути в (0, 1], специфічність у [0, 1]",
                          invariant="accuracy_range")
    return ppv(sensitivity, spec, prevalence_tested) == 1.0
