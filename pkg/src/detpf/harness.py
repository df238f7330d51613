"""Verification engine: runs identities symbolically or at random rational points.

Symbolic mode builds both denominator-cleared sides as polynomials over one
variable table and asserts exact equality.  Numeric mode draws guarded random
rational assignments (per-trial counter-based seeding, so campaigns replay
and parallelize deterministically) and compares exact evaluations.
"""

import hashlib
import json
import random
import time
from dataclasses import dataclass, field

from .identities import MAIN_DIM, InvalidParamsError, get_spec as _get_raw_spec, registry
from .poly import Polynomial, VariableTable, random_rational


SYMBOLIC_DIM_CAP = 8


class UnknownIdentityError(KeyError):
    """No identity registered under the requested name."""


class GuardExhaustionError(RuntimeError):
    """Too many consecutive random draws landed on the singular locus."""


class ConfigError(ValueError):
    """A campaign config file could not be parsed."""


def get_spec(name):
    try:
        return _get_raw_spec(name)
    except KeyError:
        raise UnknownIdentityError(name) from None


def resolve_params(spec, overrides=None):
    """Merge user params over the spec defaults, rejecting unknown keys."""
    params = dict(spec.defaults)
    for key, value in (overrides or {}).items():
        if key not in params:
            raise InvalidParamsError(f"unknown parameter {key!r} for {spec.name}")
        params[key] = value
    if spec.check is not None:
        spec.check(params)
    return params


def symbolic_cases(spec):
    return spec.symbolic_cases if spec.symbolic_cases else (spec.defaults,)


@dataclass
class VerificationReport:
    identity: str
    params: dict
    mode: str
    trials: int
    seed: int
    bound: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def to_json_obj(self):
        # elapsed intentionally omitted: replayed campaigns must be byte-identical
        return {
            "identity": self.identity,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "mode": self.mode,
            "trials": self.trials,
            "seed": self.seed,
            "bound": self.bound,
            "passed": self.passed,
            "failures": self.failures,
        }


def _scalar_text(value):
    if isinstance(value, Polynomial):
        return value.text()
    return str(value)


def _build_symbolic_scalars(vspec):
    table = VariableTable()
    for prefix, count in vspec:
        table.add_vector(prefix, count)
    gens = table.gens()
    sc = {}
    offset = 0
    for prefix, count in vspec:
        sc[prefix] = gens[offset : offset + count]
        offset += count
    return table, sc


def _trial_rng(seed, name, params, trial):
    key = "|".join(
        [
            str(seed),
            name,
            ",".join(f"{k}={params[k]}" for k in sorted(params)),
            str(trial),
        ]
    )
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _run_numeric_trial(spec, name, params, seed, bound, trial, reject_limit):
    """One guarded random evaluation; returns the failure records for this trial."""
    rng = _trial_rng(seed, name, params, trial)
    vspec = spec.vectors(params)
    rejects = 0
    while True:
        sc = {}
        named = {}
        for prefix, count in vspec:
            values = [random_rational(rng, bound) for _ in range(count)]
            sc[prefix] = values
            for i, v in enumerate(values):
                named[f"{prefix}{i + 1}"] = v
        if all(g != 0 for g in spec.guard_values(params, sc)):
            break
        rejects += 1
        if rejects >= reject_limit:
            raise GuardExhaustionError(
                f"{name}: {rejects} consecutive draws hit a guard (trial {trial})"
            )
    failures = []
    for pair_index, (lhs, rhs) in enumerate(spec.sides(params, sc, True)):
        if lhs != rhs:
            failures.append(
                {
                    "trial": trial,
                    "pair": pair_index,
                    "assignment": {k: str(v) for k, v in named.items()},
                    "lhs": _scalar_text(lhs),
                    "rhs": _scalar_text(rhs),
                }
            )
    return failures


def verify(name, params=None, mode="symbolic", trials=20, seed=0, bound=25):
    """Run one identity in one mode and return its VerificationReport."""
    spec = get_spec(name)
    params = resolve_params(spec, params)
    if mode not in ("symbolic", "numeric"):
        raise InvalidParamsError(f"unknown mode {mode!r}")
    if mode == "symbolic":
        main_dim = MAIN_DIM.get(name)
        if main_dim is not None and main_dim(params) > SYMBOLIC_DIM_CAP:
            raise InvalidParamsError(
                f"{name} at {params} exceeds the symbolic size cap "
                f"(matrix dimension {main_dim(params)} > {SYMBOLIC_DIM_CAP}); use numeric mode"
            )
    start = time.perf_counter()
    failures = []
    if mode == "symbolic":
        vspec = spec.vectors(params)
        _, sc = _build_symbolic_scalars(vspec)
        for pair_index, (lhs, rhs) in enumerate(spec.sides(params, sc, False)):
            if not lhs == rhs:
                failures.append(
                    {
                        "trial": 0,
                        "pair": pair_index,
                        "assignment": {},
                        "lhs": _scalar_text(lhs),
                        "rhs": _scalar_text(rhs),
                    }
                )
        trials_run = 1
    else:
        if trials < 1:
            raise InvalidParamsError("numeric mode requires trials >= 1")
        reject_limit = 100 * trials
        for trial in range(trials):
            failures.extend(
                _run_numeric_trial(spec, name, params, seed, bound, trial, reject_limit)
            )
        trials_run = trials
    elapsed = time.perf_counter() - start
    return VerificationReport(
        identity=name,
        params=params,
        mode=mode,
        trials=trials_run,
        seed=seed,
        bound=bound,
        failures=failures,
        elapsed=elapsed,
    )


# ---------------------------------------------------------------------------
# campaigns


@dataclass
class CampaignBlock:
    name: str
    mode: str
    trials: int
    bound: int
    seed: int
    params: dict = field(default_factory=dict)


@dataclass
class CampaignConfig:
    blocks: list = field(default_factory=list)


_GLOBAL_KEYS = ("seed", "bound", "trials", "mode")


def parse_campaign_config(text):
    """Parse the key-value config format with repeated [identity] blocks."""
    defaults = {"seed": 0, "bound": 25, "trials": 20, "mode": "numeric"}
    raw_blocks = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "[identity]":
            if current is not None:
                raw_blocks.append(current)
            current = {"params": {}}
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        try:
            if current is None:
                if key not in _GLOBAL_KEYS:
                    raise ConfigError(f"line {lineno}: unknown global key {key!r}")
                defaults[key] = value if key == "mode" else int(value)
            elif key == "name":
                current["name"] = value
            elif key == "mode":
                current["mode"] = value
            elif key in ("seed", "bound", "trials"):
                current[key] = int(value)
            else:
                current["params"][key] = int(value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
    if current is not None:
        raw_blocks.append(current)
    blocks = []
    for b in raw_blocks:
        if "name" not in b:
            raise ConfigError("an [identity] block is missing its name")
        blocks.append(
            CampaignBlock(
                name=b["name"],
                mode=b.get("mode", defaults["mode"]),
                trials=b.get("trials", defaults["trials"]),
                bound=b.get("bound", defaults["bound"]),
                seed=b.get("seed", defaults["seed"]),
                params=b["params"],
            )
        )
    return CampaignConfig(blocks)


def default_campaign_config(seed=2024, bound=30, trials=20):
    """The desk-scale grid: every identity symbolically at its minimal cases,
    then numerically at its larger parameter set."""
    blocks = []
    for name in registry():
        spec = get_spec(name)
        for case in symbolic_cases(spec):
            blocks.append(CampaignBlock(name, "symbolic", 1, bound, seed, dict(case)))
        blocks.append(
            CampaignBlock(name, "numeric", trials, bound, seed, dict(spec.numeric_defaults))
        )
    return CampaignConfig(blocks)


def _campaign_task(args):
    name, params, mode, trials, seed, bound, trial = args
    spec = get_spec(name)
    params = resolve_params(spec, params)
    if mode == "symbolic":
        report = verify(name, params, "symbolic", 1, seed, bound)
        return report.failures, report.elapsed
    start = time.perf_counter()
    failures = _run_numeric_trial(spec, name, params, seed, bound, trial, 100 * trials)
    return failures, time.perf_counter() - start


def run_campaign(config, workers=1):
    """Run all blocks; trial outcomes merge in (block, trial) order regardless of workers."""
    if workers <= 1:
        return [
            verify(b.name, b.params, b.mode, b.trials, b.seed, b.bound)
            for b in config.blocks
        ]
    tasks = []
    task_keys = []
    for bi, b in enumerate(config.blocks):
        spec = get_spec(b.name)
        resolve_params(spec, b.params)
        if b.mode == "numeric":
            for t in range(b.trials):
                tasks.append((b.name, b.params, b.mode, b.trials, b.seed, b.bound, t))
                task_keys.append((bi, t))
        else:
            tasks.append((b.name, b.params, b.mode, b.trials, b.seed, b.bound, 0))
            task_keys.append((bi, 0))
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_campaign_task, tasks))
    per_block = {}
    for (bi, t), (failures, elapsed) in zip(task_keys, results):
        per_block.setdefault(bi, []).append((t, failures, elapsed))
    reports = []
    for bi, b in enumerate(config.blocks):
        chunks = sorted(per_block.get(bi, []))
        failures = [f for _, fs, _ in chunks for f in fs]
        elapsed = sum(e for _, _, e in chunks)
        spec = get_spec(b.name)
        reports.append(
            VerificationReport(
                identity=b.name,
                params=resolve_params(spec, b.params),
                mode=b.mode,
                trials=b.trials if b.mode == "numeric" else 1,
                seed=b.seed,
                bound=b.bound,
                failures=failures,
                elapsed=elapsed,
            )
        )
    return reports


def reports_to_json(reports):
    """Stable-order JSON array; byte-identical across replays with the same seed."""
    return json.dumps([r.to_json_obj() for r in reports], indent=2) + "\n"
