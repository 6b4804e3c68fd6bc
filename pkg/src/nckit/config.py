"""Plain-text configuration files.

One INI-style file can carry up to three sections:

    [theta]            deformation profile, entries as polynomials in t
    t12 = t^2
    t23 = 1/2

    [planewave]        wave data for the electromagnetic ansatz
    omega = 3
    k = 1 2 2
    p = 1 2 0 1
    profile = cos      (or ascending coefficients in u: "0 0 1")

    [grid]             numerical oracle parameters
    n = 128
    box_length = 6.283185307179586
    theta = 0.4
    max_mode = 31
    seed = 7

Every section is optional; unknown keys are rejected so typos fail loudly
instead of silently falling back to defaults.
"""

from __future__ import annotations

import configparser
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .expr import ParseError, evaluate, parse_expression
from .planewave import PlaneWaveSpec
from .poly import Poly
from .star import StarContext, ThetaProfile


class ConfigError(Exception):
    pass


_FLAT = StarContext(ThetaProfile.zero())


def _theta_entry(key: str, text: str) -> Poly:
    try:
        value = evaluate(parse_expression(text), _FLAT)
    except ParseError as exc:
        raise ConfigError(f"[theta] {key}: {exc}") from None
    if not isinstance(value, Poly):
        raise ConfigError(f"[theta] {key} must be a scalar polynomial")
    if not value.uses_only(("t",)):
        raise ConfigError(f"[theta] {key} may only involve t")
    if not value.is_real_valued():
        raise ConfigError(f"[theta] {key} must be real-valued")
    return value


def _parse_theta(section) -> ThetaProfile:
    entries = {}
    slots = {"t12": (1, 2), "t13": (1, 3), "t23": (2, 3)}
    for key, text in section.items():
        if key not in slots:
            raise ConfigError(f"unknown key {key!r} in [theta]")
        entries[slots[key]] = _theta_entry(key, text)
    return ThetaProfile(entries)


def _fraction(text: str, where: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{where}: not a rational: {text!r}") from None


def _fraction_list(text: str, count: int, where: str) -> tuple[Fraction, ...]:
    parts = text.split()
    if len(parts) != count:
        raise ConfigError(f"{where}: expected {count} entries, got {len(parts)}")
    return tuple(_fraction(p, where) for p in parts)


def _parse_planewave(section) -> PlaneWaveSpec:
    known = {"omega", "k", "p", "profile"}
    for key in section:
        if key not in known:
            raise ConfigError(f"unknown key {key!r} in [planewave]")
    for key in ("omega", "k", "p"):
        if key not in section:
            raise ConfigError(f"[planewave] is missing {key!r}")
    omega = _fraction(section["omega"], "[planewave] omega")
    k = _fraction_list(section["k"], 3, "[planewave] k")
    p = _fraction_list(section["p"], 4, "[planewave] p")
    profile_text = section.get("profile", "cos").strip()
    if profile_text == "cos":
        profile = "cos"
    else:
        parts = profile_text.split()
        profile = tuple(_fraction(v, "[planewave] profile") for v in parts)
    try:
        return PlaneWaveSpec(omega, k, p, profile)
    except ValueError as exc:
        raise ConfigError(f"[planewave]: {exc}") from None


@dataclass(frozen=True)
class GridParams:
    n: int = 128
    box_length: float = 2.0 * math.pi
    theta: float = 0.4
    max_mode: int | None = None
    seed: int = 0


def _parse_grid(section) -> GridParams:
    known = {"n", "box_length", "theta", "max_mode", "seed"}
    for key in section:
        if key not in known:
            raise ConfigError(f"unknown key {key!r} in [grid]")
    try:
        kwargs = {}
        if "n" in section:
            kwargs["n"] = int(section["n"])
        if "box_length" in section:
            kwargs["box_length"] = float(section["box_length"])
        if "theta" in section:
            kwargs["theta"] = float(section["theta"])
        if "max_mode" in section:
            kwargs["max_mode"] = int(section["max_mode"])
        if "seed" in section:
            kwargs["seed"] = int(section["seed"])
    except ValueError as exc:
        raise ConfigError(f"[grid]: {exc}") from None
    params = GridParams(**kwargs)
    if params.n < 4 or params.n & (params.n - 1):
        raise ConfigError("[grid] n must be a power of two, at least 4")
    if not params.box_length > 0:
        raise ConfigError("[grid] box_length must be positive")
    return params


@dataclass(frozen=True)
class Config:
    theta: ThetaProfile | None = None
    planewave: PlaneWaveSpec | None = None
    grid: GridParams | None = None


def load_config(path) -> Config:
    if not os.path.exists(path):
        raise ConfigError(f"no such config file: {path}")
    cp = configparser.ConfigParser()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cp.read_file(fh)
    except (configparser.Error, OSError) as exc:
        raise ConfigError(f"{path}: {exc}") from None
    for name in cp.sections():
        if name not in ("theta", "planewave", "grid"):
            raise ConfigError(f"unknown section [{name}]")
    theta = _parse_theta(cp["theta"]) if cp.has_section("theta") else None
    wave = (_parse_planewave(cp["planewave"])
            if cp.has_section("planewave") else None)
    grid = _parse_grid(cp["grid"]) if cp.has_section("grid") else None
    return Config(theta, wave, grid)


def load_theta(path) -> ThetaProfile:
    """Read just the deformation profile; absence means the flat profile."""
    cfg = load_config(path)
    return cfg.theta if cfg.theta is not None else ThetaProfile.zero()
