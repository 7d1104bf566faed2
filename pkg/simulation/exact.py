"""
Точні очікування для малих популяцій

Повний перебір станів рецепту з simulation/world.py. Особи обмінні, тому
стан описується четвіркою (інфіковані ненатестовані, здорові ненатестовані,
інфіковані натестовані, здорові натестовані). Результати тестів не впливають
на інфікування та вибір на тест, тому в стані не зберігаються.
"""

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Sequence

from core.errors import ConfigError

MAX_POPULATION = 64


@dataclass(frozen=True)
class ExactDayRates:
    """Очікувані кількості інфікованих серед натестованих і ненатестованих на кінець дня"""
    day: int
    tested: int
    untested: int
    expected_tested_infected: float
    expected_untested_infected: float

    @property
    def tested_rate(self) -> float:
        return self.expected_tested_infected / self.tested if self.tested else float('nan')

    @property
    def untested_rate(self) -> float:
        return self.expected_untested_infected / self.untested if self.untested else float('nan')


def _binomial(n: int, p: float) -> list[tuple[int, float]]:
    return [(k, comb(n, k) * p ** k * (1.0 - p) ** (n - k)) for k in range(n + 1)]


def weighted_draw_distribution(infected: int, healthy: int, draws: int, weight: float) -> dict[int, float]:
    """
    Розподіл кількості інфікованих серед draws осіб, вибраних без повернення
    з вагою weight для інфікованих та 1 для здорових
    """
    distribution = {0: 1.0}
    for step in range(draws):
        following = defaultdict(float)
        for chosen, probability in distribution.items():
            left_infected = infected - chosen
            left_healthy = healthy - (step - chosen)
            total = weight * left_infected + left_healthy
            p_infected = weight * left_infected / total
            if left_infected > 0:
                following[chosen + 1] += probability * p_infected
            if left_healthy > 0:
                following[chosen] += probability * (1.0 - p_infected)
        distribution = dict(following)
    return distribution


def exact_testing_rates(population: int, hazards: Sequence[float], budgets: Sequence[int],
                        triage_strength: float) -> list[ExactDayRates]:
    """
    Точні очікувані показники інфікування серед натестованих та ненатестованих

    Args:
        population: Розмір популяції (≤ MAX_POPULATION)
        hazards: Денні ймовірності інфікування
        budgets: Денні бюджети тестів
        triage_strength: Вага інфікованих при виборі на тест

    Returns:
        Список ExactDayRates за днями
    """
    if not (0 < population <= MAX_POPULATION):
        raise ConfigError(f"Повний перебір підтримує популяцію до {MAX_POPULATION}",
                          invariant="population_range")
    if len(hazards) != len(budgets):
        raise ConfigError("Розклади інфікування та тестів мають однакову довжину",
                          invariant="schedule_length")

    states = {(0, population, 0, 0): 1.0}
    result = []
    for day, (hazard, budget) in enumerate(zip(hazards, budgets)):
        infected_states = defaultdict(float)
        for (iu, su, it, st), probability in states.items():
            for new_untested, p_untested in _binomial(su, hazard):
                for new_tested, p_tested in _binomial(st, hazard):
                    key = (iu + new_untested, su - new_untested, it + new_tested, st - new_tested)
                    infected_states[key] += probability * p_untested * p_tested

        tested_states = defaultdict(float)
        for (iu, su, it, st), probability in infected_states.items():
            draws = min(budget, iu + su)
            for chosen, p_chosen in weighted_draw_distribution(iu, su, draws, triage_strength).items():
                key = (iu - chosen, su - (draws - chosen), it + chosen, st + draws - chosen)
                tested_states[key] += probability * p_chosen
        states = dict(tested_states)

        tested = next(iter(states))[2] + next(iter(states))[3]
        result.append(ExactDayRates(
            day=day,
            tested=tested,
            untested=population - tested,
            expected_tested_infected=sum(p * key[2] for key, p in states.items()),
            expected_untested_infected=sum(p * key[0] for key, p in states.items()),
        ))
    return result
