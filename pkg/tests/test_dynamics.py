import math

import numpy as np
import pytest

from catcorr import (
    DephasingChannel,
    DomainError,
    Parity,
    SuperpositionSpec,
    apply_dephasing,
    concurrence_t,
    concurrence_x,
    default_time_grid,
    discord_mixed_closed,
    discord_t,
    reduced_rho12,
    sudden_death_time,
)


def spec(p, parity, n):
    return SuperpositionSpec(p=p, parity=parity, n=n)


def test_channel_gamma_growth():
    ch = DephasingChannel(gamma_rate=0.0, t=5.0)
    assert ch.gamma == 0.0
    ch = DephasingChannel(gamma_rate=1.0, t=0.0)
    assert ch.gamma == 0.0
    ch = DephasingChannel(gamma_rate=2.0, t=1.0)
    assert ch.gamma == pytest.approx(1.0 - math.exp(-2.0), abs=1e-15)
    assert DephasingChannel(gamma_rate=1.0, t=math.inf).gamma == 1.0


def test_channel_validation():
    with pytest.raises(DomainError):
        DephasingChannel(gamma_rate=-1.0, t=0.0)
    with pytest.raises(DomainError):
        DephasingChannel(gamma_rate=1.0, t=-0.5)
    with pytest.raises(DomainError):
        DephasingChannel(gamma_rate=math.nan, t=1.0)


def test_channel_from_gamma_round_trip(rng):
    for g in rng.uniform(0.0, 0.999, size=20):
        ch = DephasingChannel.from_gamma(float(g), gamma_rate=0.7)
        assert ch.gamma == pytest.approx(float(g), abs=1e-12)
    assert DephasingChannel.from_gamma(1.0).t == math.inf
    with pytest.raises(DomainError):
        DephasingChannel.from_gamma(1.5)
    with pytest.raises(DomainError):
        DephasingChannel.from_gamma(0.5, gamma_rate=0.0)


def test_kraus_closure():
    ch = DephasingChannel(gamma_rate=1.3, t=0.8)
    e0, e1 = ch.kraus_single()
    closure = e0.conj().T @ e0 + e1.conj().T @ e1
    assert np.max(np.abs(closure - np.eye(2))) < 1e-15


def test_apply_dephasing_action(rng):
    for _ in range(20):
        p = float(rng.uniform(0.0, 0.99))
        n = int(rng.integers(2, 8))
        parity = Parity.EVEN if rng.integers(2) else Parity.ODD
        s = spec(p, parity, n)
        before = reduced_rho12(s)
        ch = DephasingChannel(gamma_rate=1.0, t=float(rng.uniform(0.0, 3.0)))
        after = apply_dephasing(before, ch).matrix
        decay = 1.0 - ch.gamma
        # populations frozen, coherences damped by 1 - gamma
        assert np.max(np.abs(np.diag(after) - np.diag(before.matrix))) < 1e-14
        assert after[0, 3] == pytest.approx(before.matrix[0, 3] * decay, abs=1e-14)
        assert after[1, 2] == pytest.approx(before.matrix[1, 2] * decay, abs=1e-14)


def test_apply_dephasing_identity_at_t0():
    s = spec(0.6, Parity.ODD, 4)
    state = reduced_rho12(s)
    ch = DephasingChannel(gamma_rate=1.0, t=0.0)
    assert np.max(np.abs(apply_dephasing(state, ch).matrix - state.matrix)) < 1e-15


def test_concurrence_t_matches_spin_flip_oracle(rng):
    worst = 0.0
    for _ in range(40):
        p = float(rng.uniform(0.0, 0.99))
        n = int(rng.integers(2, 9))
        parity = Parity.EVEN if rng.integers(2) else Parity.ODD
        s = spec(p, parity, n)
        ch = DephasingChannel(gamma_rate=1.0, t=float(rng.uniform(0.0, 4.0)))
        closed = concurrence_t(s, ch)
        oracle = concurrence_x(apply_dephasing(reduced_rho12(s), ch))
        worst = max(worst, abs(closed - oracle))
    assert worst < 1e-10


def test_concurrence_t_zero_time_matches_static(rng):
    ch = DephasingChannel(gamma_rate=1.0, t=0.0)
    for _ in range(20):
        p = float(rng.uniform(0.0, 0.99))
        n = int(rng.integers(2, 9))
        parity = Parity.EVEN if rng.integers(2) else Parity.ODD
        s = spec(p, parity, n)
        assert concurrence_t(s, ch) == pytest.approx(
            discord_mixed_closed(s).concurrence, abs=1e-14
        )


def test_sudden_death_time_formula():
    s = spec(0.5, Parity.ODD, 4)
    q = 0.25
    expect = math.log((1.0 + q) / (1.0 - q))
    assert sudden_death_time(s, 1.0) == pytest.approx(expect, abs=1e-12)
    assert sudden_death_time(s, 2.0) == pytest.approx(expect / 2.0, abs=1e-12)
    with pytest.raises(DomainError):
        sudden_death_time(s, 0.0)


def test_sudden_death_time_edge_cases():
    # q = 1 keeps entanglement alive forever
    assert sudden_death_time(spec(0.5, Parity.ODD, 2), 1.0) == math.inf
    assert sudden_death_time(spec(1.0, Parity.EVEN, 5), 1.0) == math.inf
    # orthogonal branches never had any
    assert sudden_death_time(spec(0.0, Parity.EVEN, 4), 1.0) == 0.0


def test_concurrence_dies_exactly_at_t_death(rng):
    for _ in range(15):
        p = float(rng.uniform(0.2, 0.95))
        n = int(rng.integers(3, 8))
        parity = Parity.EVEN if rng.integers(2) else Parity.ODD
        s = spec(p, parity, n)
        rate = float(rng.uniform(0.3, 2.0))
        t0 = sudden_death_time(s, rate)
        assert concurrence_t(s, DephasingChannel(rate, 0.999 * t0)) > 0.0
        assert concurrence_t(s, DephasingChannel(rate, 1.001 * t0)) == 0.0
        assert concurrence_t(s, DephasingChannel(rate, 3.0 * t0)) == 0.0


def test_discord_survives_entanglement_death():
    s = spec(0.5, Parity.EVEN, 4)
    rate = 1.0
    t0 = sudden_death_time(s, rate)
    ch = DephasingChannel(rate, 2.0 * t0)
    assert concurrence_t(s, ch) == 0.0
    assert discord_t(s, ch) > 1e-3


def test_discord_t_zero_time_matches_closed(rng):
    for _ in range(6):
        p = float(rng.uniform(0.1, 0.95))
        n = int(rng.integers(2, 7))
        parity = Parity.EVEN if rng.integers(2) else Parity.ODD
        s = spec(p, parity, n)
        ch = DephasingChannel(gamma_rate=1.0, t=0.0)
        assert discord_t(s, ch) == pytest.approx(
            discord_mixed_closed(s).discord, abs=1e-9
        )


def test_discord_t_vanishes_for_uncorrelated_state():
    s = spec(0.0, Parity.EVEN, 3)
    ch = DephasingChannel(gamma_rate=1.0, t=1.0)
    assert abs(discord_t(s, ch)) < 1e-12


def test_default_time_grid_shapes():
    s = spec(0.5, Parity.ODD, 4)
    grid = default_time_grid(s, 1.0)
    assert grid.shape == (200,)
    assert grid[0] == 0.0
    assert grid[-1] == pytest.approx(3.0 * sudden_death_time(s, 1.0), abs=1e-12)
    # infinite death time falls back to a rate-scaled horizon
    grid = default_time_grid(spec(0.5, Parity.ODD, 2), 2.0, steps=50)
    assert grid.shape == (50,)
    assert grid[-1] == pytest.approx(2.5, abs=1e-12)
    # so does zero death time (p = 0)
    grid = default_time_grid(spec(0.0, Parity.EVEN, 3), 1.0, steps=10)
    assert grid[-1] == pytest.approx(5.0, abs=1e-12)
    with pytest.raises(DomainError):
        default_time_grid(s, 1.0, steps=1)
