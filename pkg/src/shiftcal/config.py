"""Plant, noise, controller and optimizer configuration.

Everything is plain dataclasses with defaults matching the reference
motorcycle driveline used throughout the test suite. Configs load from a
single INI file with sections [plant], [noise], [controller], [optimizer];
any key absent from the file keeps its default, unknown keys are rejected.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import ConfigError

# Gear index used for the disengaged gearbox in telemetry and state.
NEUTRAL = 0


@dataclass(frozen=True)
class NoiseConfig:
    """Measurement noise and driver-variability model."""

    engagement_delay_mean: float = 0.060  # s, driver pedal-stroke delay
    engagement_delay_std: float = 0.010   # s
    speed_meas_std: float = 0.5           # rad/s, on exported omega_e/omega_w
    accel_meas_std: float = 0.15          # m/s^2, on exported a_xr
    seed: int = 0                         # default entropy when caller gives none

    def validate(self) -> None:
        if self.engagement_delay_mean < 0:
            raise ConfigError("engagement_delay_mean must be >= 0")
        if self.engagement_delay_std < 0 or self.speed_meas_std < 0 or self.accel_meas_std < 0:
            raise ConfigError("noise std fields must be >= 0")
        if self.seed < 0:
            raise ConfigError("seed must be unsigned")

    def disabled(self) -> "NoiseConfig":
        """Copy with all randomness removed (delay collapses to its mean)."""
        return replace(self, engagement_delay_std=0.0, speed_meas_std=0.0, accel_meas_std=0.0)


@dataclass(frozen=True)
class SimConfig:
    """Two-inertia driveline plant plus the cruise context a maneuver starts from.

    The shaft spring/damper sits between the gearbox output and the wheel;
    gear ratios are engine-speed-per-wheel-speed. road_load is the constant
    wheel-side torque resisting motion; left  None it is derived so the
    cruise condition is an exact equilibrium.
    """

    j_e: float = 0.08            # kg m^2, engine-side inertia
    j_v: float = 18.0            # kg m^2, vehicle inertia at the wheel
    gear_ratios: tuple[tuple[int, float], ...] = ((1, 11.5), (2, 8.2), (3, 6.4), (4, 5.3))
    k_s: float = 6000.0          # N m/rad, shaft torsional stiffness
    c_s: float = 15.0            # N m s/rad, shaft torsional damping
    t_cap0: float = 220.0        # N m, clutch capacity fully closed
    p_open: float = 25.0         # bar, pressure at zero capacity
    tau_eng: float = 0.02        # s, engine torque actuator lag
    tau_cbw: float = 0.045       # s, clutch pressure lag
    r_w: float = 0.32            # m, wheel radius
    dt: float = 0.001            # s, integration/sampling step
    noise: NoiseConfig = field(default_factory=NoiseConfig)

    # Maneuver context (cruise equilibrium the shift starts from).
    cruise_torque: float = 40.0      # N m, engine torque held before the shift
    cruise_omega_e: float = 500.0    # rad/s, engine speed before the shift
    cruise_gear: int = 2
    road_load: float | None = None   # N m at the wheel; None = balance cruise
    horizon: float = 1.8             # s, total simulated time

    # Gearbox engagement mechanics.
    engage_torque_max: float = 8.0   # N m, dogs release/engage below this
    lock_omega_thresh: float = 0.5   # rad/s, clutch lock slip threshold

    def ratio(self, gear: int) -> float:
        for g, r in self.gear_ratios:
            if g == gear:
                return r
        raise ConfigError(f"gear {gear} not configured")

    def resolved_road_load(self) -> float:
        if self.road_load is not None:
            return self.road_load
        return self.cruise_torque * self.ratio(self.cruise_gear)

    def validate(self) -> None:
        positive = {
            "j_e": self.j_e, "j_v": self.j_v, "k_s": self.k_s, "c_s": self.c_s,
            "t_cap0": self.t_cap0, "p_open": self.p_open, "tau_eng": self.tau_eng,
            "tau_cbw": self.tau_cbw, "r_w": self.r_w, "dt": self.dt,
            "horizon": self.horizon, "engage_torque_max": self.engage_torque_max,
            "lock_omega_thresh": self.lock_omega_thresh,
        }
        for name, value in positive.items():
            if not (math.isfinite(value) and value > 0):
                raise ConfigError(f"{name} must be finite and > 0, got {value}")
        if not self.gear_ratios:
            raise ConfigError("gear_ratios must not be empty")
        gears = [g for g, _ in self.gear_ratios]
        ratios = [r for _, r in self.gear_ratios]
        if gears != sorted(gears) or len(set(gears)) != len(gears):
            raise ConfigError("gear numbers must be unique and increasing")
        if any(r <= 0 for r in ratios):
            raise ConfigError("gear ratios must be > 0")
        if any(r2 >= r1 for r1, r2 in zip(ratios, ratios[1:])):
            raise ConfigError("gear ratios must strictly decrease with gear number")
        if NEUTRAL in gears:
            raise ConfigError(f"gear index {NEUTRAL} is reserved for neutral")
        self.ratio(self.cruise_gear)
        if self.cruise_omega_e <= 0:
            raise ConfigError("cruise_omega_e must be > 0")
        if self.road_load is not None and not math.isfinite(self.road_load):
            raise ConfigError("road_load must be finite")
        self.noise.validate()


@dataclass(frozen=True)
class ControllerConfig:
    """Shift-schedule shape parameters that are not optimization variables."""

    t_a: float = 0.3            # s, shift request instant within the horizon
    t_close: float = 0.2        # s, clutch pressure closing ramp duration
    torque_floor: float = -10.0  # N m, engine torque during the cut
    tau_cut: float = 0.028      # s, default torque-cut delay (tuned QS value)
    tau_reset: float = 0.038    # s, default torque-reset delay (tuned QS value)
    p_high: float | None = None  # bar, pressure step; None = not configured
    target_gear: int = 3

    def validate(self, sim: SimConfig | None = None) -> None:
        if not (math.isfinite(self.t_a) and self.t_a > 0):
            raise ConfigError("t_a must be finite and > 0")
        if not (math.isfinite(self.t_close) and self.t_close > 0):
            raise ConfigError("t_close must be finite and > 0")
        if not math.isfinite(self.torque_floor):
            raise ConfigError("torque_floor must be finite")
        for name, value in (("tau_cut", self.tau_cut), ("tau_reset", self.tau_reset)):
            if not (math.isfinite(value) and value >= 0):
                raise ConfigError(f"{name} must be finite and >= 0")
        if self.p_high is not None and not (math.isfinite(self.p_high) and self.p_high >= 0):
            raise ConfigError("p_high must be finite and >= 0")
        if sim is not None:
            sim.ratio(self.target_gear)
            if sim.horizon < self.t_a + 1.5:
                raise ConfigError("horizon must cover t_a + 1.5 s")


@dataclass(frozen=True)
class OptimizerConfig:
    """Search box and campaign parameters for the tuning loop."""

    p_high_min: float = 10.0     # bar
    p_high_max: float = 30.0
    tau_cut_min: float = 0.0     # s
    tau_cut_max: float = 0.1
    tau_reset_min: float = 0.0   # s
    tau_reset_max: float = 0.1
    lam: float = 0.8             # smoothness weight in the cost
    budget: int = 50             # total experiments N
    initial_random: int = 4      # random initialization samples
    max_duration: float = 0.5    # s, duration constraint bound

    def bounds(self) -> tuple[tuple[float, float, float], tuple[float, float, float]]:
        lo = (self.p_high_min, self.tau_cut_min, self.tau_reset_min)
        hi = (self.p_high_max, self.tau_cut_max, self.tau_reset_max)
        return lo, hi

    def validate(self) -> None:
        lo, hi = self.bounds()
        if any(not math.isfinite(v) for v in lo + hi):
            raise ConfigError("search bounds must be finite")
        if any(l >= h for l, h in zip(lo, hi)):
            raise ConfigError("lower bounds must be strictly below upper bounds")
        if not 0.0 < self.lam < 1.0:
            raise ConfigError("lambda must be in (0, 1)")
        if self.budget < 1 or self.initial_random < 2:
            raise ConfigError("budget >= 1 and initial_random >= 2 required")
        if self.initial_random >= self.budget:
            raise ConfigError("initial_random must be below budget")
        if self.max_duration <= 0:
            raise ConfigError("max_duration must be > 0")


@dataclass(frozen=True)
class FullConfig:
    sim: SimConfig = field(default_factory=SimConfig)
    controller: ControllerConfig = field(default_factory=ControllerConfig)
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)

    def validate(self) -> None:
        self.sim.validate()
        self.controller.validate(self.sim)
        self.optimizer.validate()


_PLANT_KEYS = {
    "j_e": float, "j_v": float, "k_s": float, "c_s": float, "t_cap0": float,
    "p_open": float, "tau_eng": float, "tau_cbw": float, "r_w": float,
    "dt": float, "cruise_torque": float, "cruise_omega_e": float,
    "cruise_gear": int, "road_load": float, "horizon": float,
    "engage_torque_max": float, "lock_omega_thresh": float,
    "gear_ratios": str,
}
_NOISE_KEYS = {
    "engagement_delay_mean": float, "engagement_delay_std": float,
    "speed_meas_std": float, "accel_meas_std": float, "seed": int,
}
_CONTROLLER_KEYS = {
    "t_a": float, "t_close": float, "torque_floor": float,
    "tau_cut": float, "tau_reset": float, "p_high": float, "target_gear": int,
}
_OPTIMIZER_KEYS = {
    "p_high_min": float, "p_high_max": float, "tau_cut_min": float,
    "tau_cut_max": float, "tau_reset_min": float, "tau_reset_max": float,
    "lam": float, "budget": int, "initial_random": int, "max_duration": float,
}


def _parse_gear_ratios(text: str) -> tuple[tuple[int, float], ...]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            gear, ratio = chunk.split(":")
            pairs.append((int(gear), float(ratio)))
        except ValueError as exc:
            raise ConfigError(f"bad gear_ratios entry {chunk!r}; expected GEAR:RATIO") from exc
    if not pairs:
        raise ConfigError("gear_ratios parsed empty")
    return tuple(pairs)


def _section_kwargs(parser: configparser.ConfigParser, section: str, schema: dict) -> dict:
    if not parser.has_section(section):
        return {}
    kwargs = {}
    for key, raw in parser.items(section):
        if key not in schema:
            raise ConfigError(f"unknown key {key!r} in [{section}]")
        if key == "gear_ratios":
            kwargs[key] = _parse_gear_ratios(raw)
            continue
        try:
            kwargs[key] = schema[key](raw)
        except ValueError as exc:
            raise ConfigError(f"bad value for {key!r} in [{section}]: {raw!r}") from exc
    return kwargs


def load_config(path: str | Path | None) -> FullConfig:
    """Load the INI config file, falling back to defaults for absent keys."""
    if path is None:
        cfg = FullConfig()
        cfg.validate()
        return cfg
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc
    known = {"plant", "noise", "controller", "optimizer"}
    extra = set(parser.sections()) - known
    if extra:
        raise ConfigError(f"unknown config sections: {sorted(extra)}")

    noise = NoiseConfig(**_section_kwargs(parser, "noise", _NOISE_KEYS))
    sim = SimConfig(noise=noise, **_section_kwargs(parser, "plant", _PLANT_KEYS))
    controller = ControllerConfig(**_section_kwargs(parser, "controller", _CONTROLLER_KEYS))
    optimizer = OptimizerConfig(**_section_kwargs(parser, "optimizer", _OPTIMIZER_KEYS))
    cfg = FullConfig(sim=sim, controller=controller, optimizer=optimizer)
    cfg.validate()
    return cfg
