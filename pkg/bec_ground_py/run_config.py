"""Contains the loading and validation of run configurations."""

# Python libraries
import itertools
import json
import os
import re
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field

# bec_ground_py components
from .bec import BecSpec, Family, INTERACTION_NAMES
from .errors import BecGroundError, ConfigError
from .grid import CustomPotential, Domain, HarmonicLatticePotential, Scheme, constant_potential
from .linsolve import LinearSolverConfig
from .nonlinearities import plugin_modified_gpe, plugin_quartic, plugin_saturable
from .presets import PRESETS
from .solvers import SolverConfig

SUPPORTED_METHODS = ["anni", "alm", "multiblock"]

FAMILY_NAMES = {
    "spin_half": Family.SPIN_HALF,
    "spin1": Family.SPIN1_REDUCED,
    "spin2": Family.SPIN2_REDUCED,
    "custom": Family.CUSTOM,
}

POTENTIAL_KINDS = {
    "harmonic_lattice": HarmonicLatticePotential,
    "custom": lambda reference: CustomPotential.from_reference(reference),
    "constant": constant_potential,
}

NONLINEARITY_PLUGINS = {
    "quartic": plugin_quartic,
    "saturable": plugin_saturable,
    "modified_gpe": plugin_modified_gpe,
}

SOLVER_FIELDS = [name for name in SolverConfig.__dataclass_fields__ if name != "inner"]
LINEAR_FIELDS = list(LinearSolverConfig.__dataclass_fields__)
PROBLEM_FIELDS = ["family", "scheme", "lower", "upper", "n", "potential", "interactions", "alpha", "magnetization", "zeeman"]
PROBLEM_FIELDS += ["preset", "parameters", "label"]

# The TOML parser reports positions as "(at line X, column Y)"
TOML_POSITION = re.compile(r"at line (\d+), column (\d+)")


def load_config(input_file) -> dict:
    """Reads a run configuration from a dictionary, a JSON file or a TOML file.

    Args:
        input_file (dict or str): Configuration dictionary or path (".json" files are parsed as JSON, anything else as TOML).

    Returns:
        data (dict): Raw configuration.
    """
    if type(input_file) is dict:
        return input_file

    path = os.fspath(input_file)
    if not os.path.exists(path):
        raise ConfigError(f"Could not find the configuration file '{path}'.")

    if path.endswith(".json"):
        with open(path, "r", encoding="UTF-8") as read_file:
            try:
                return json.load(read_file)
            except json.JSONDecodeError as error:
                raise ConfigError(error.msg, line=error.lineno, column=error.colno) from error

    with open(path, "rb") as read_file:
        try:
            return tomllib.load(read_file)
        except tomllib.TOMLDecodeError as error:
            position = TOML_POSITION.search(str(error))
            line, column = (int(position.group(1)), int(position.group(2))) if position else (None, None)
            raise ConfigError(str(error).split(" (at")[0], line=line, column=column) from error


def _check_keys(section: dict, allowed: list, prefix: str) -> None:
    unknown = sorted(set(section) - set(allowed))
    if unknown:
        raise ConfigError(f"Unknown keys {unknown}. Supported keys are {allowed}.", field=f"{prefix}.{unknown[0]}")


def _required(section: dict, key: str, prefix: str) -> object:
    if key not in section:
        raise ConfigError("Missing required field.", field=f"{prefix}.{key}")

    return section[key]


@dataclass
class RunConfig:
    """Problem, solver, sweep and output sections of one experiment."""

    problem: dict
    solver: dict = field(default_factory=dict)
    sweep: dict = field(default_factory=dict)
    output: dict = field(default_factory=dict)

    def __post_init__(self):
        _check_keys(self.problem, PROBLEM_FIELDS, "problem")
        _check_keys(self.solver, SOLVER_FIELDS + ["method", "linear", "plugins"], "solver")
        _check_keys(self.output, ["directory", "dump_states", "threads"], "output")

        if self.method not in SUPPORTED_METHODS:
            raise ConfigError(
                f"Unsupported method '{self.method}'. Supported methods are {SUPPORTED_METHODS}.",
                field="solver.method",
            )

        for index, specification in enumerate(self.solver.get("plugins", [])):
            if dict(specification).get("name") not in NONLINEARITY_PLUGINS:
                raise ConfigError(
                    f"Unknown plugin. Supported plugins are {list(NONLINEARITY_PLUGINS)}.",
                    field=f"solver.plugins[{index}]",
                )
        if "plugins" in self.solver and len(self.solver["plugins"]) != 2:
            raise ConfigError("Multi-block runs take one plugin per component (2 entries).", field="solver.plugins")

        for name, values in self.sweep.items():
            if not isinstance(values, list) or len(values) == 0:
                raise ConfigError("Sweep lists must be nonempty lists.", field=f"sweep.{name}")

        if "preset" not in self.problem:
            if self.problem.get("family", "spin_half") not in FAMILY_NAMES:
                raise ConfigError(f"Unknown family. Supported families are {list(FAMILY_NAMES)}.", field="problem.family")
            _required(self.problem, "lower", "problem")
            _required(self.problem, "upper", "problem")
            _required(self.problem, "n", "problem")

        # Every sweep point must build
        self.solver_config()
        for _, overrides in self.points():
            self.build_spec(overrides)

    @classmethod
    def _from_dict(cls, dictionary: dict) -> object:
        """Method that creates an object based on a dictionary specification.

        Args:
            dictionary (dict): Raw configuration with "problem", "solver", "sweep" and "output" sections.

        Returns:
            config (RunConfig): Validated configuration.
        """
        _check_keys(dictionary, ["problem", "solver", "sweep", "output"], "config")
        return cls(
            problem=dict(_required(dictionary, "problem", "config")),
            solver=dict(dictionary.get("solver", {})),
            sweep=dict(dictionary.get("sweep", {})),
            output=dict(dictionary.get("output", {})),
        )

    @property
    def method(self) -> str:
        """Solver name."""
        return str(self.solver.get("method", "anni")).lower()

    def points(self) -> list:
        """Crosses the sweep lists in declaration order.

        Returns:
            points (list): (run_id, overrides) pairs, one per parameter tuple.
        """
        names = list(self.sweep)
        combinations = list(itertools.product(*self.sweep.values())) if names else [()]

        points = []
        for index, values in enumerate(combinations):
            overrides = dict(zip(names, values))
            suffix = "".join(f"_{name}={value:g}" for name, value in overrides.items())
            points.append((f"{index:03d}{suffix}", overrides))

        return points

    def parameter_names(self) -> list:
        """Returns the parameter columns of the summary table (the swept names, or the spec's own parameters)."""
        if self.sweep:
            return list(self.sweep)

        return list(self.build_spec({}).parameters())

    def solver_config(self) -> SolverConfig:
        """Creates the SolverConfig described by the [solver] section.

        Returns:
            config (SolverConfig): Solver settings.
        """
        options = {name: value for name, value in self.solver.items() if name in SOLVER_FIELDS}
        if str(options.get("tau2", "")).lower() == "auto":
            options["tau2"] = None

        linear = dict(self.solver.get("linear", {}))
        _check_keys(linear, LINEAR_FIELDS, "solver.linear")

        try:
            return SolverConfig(inner=LinearSolverConfig(**linear), **options)
        except (BecGroundError, ValueError, TypeError) as error:
            raise ConfigError(str(error), field="solver") from error

    def plugins(self, p: object) -> list:
        """Creates the nonlinearity plugins of a multi-block run.

        Args:
            p (CoupledProblem): Problem whose quartic coefficients are the default plugins.

        Returns:
            plugins (list): One plugin per block.
        """
        specifications = self.solver.get("plugins")
        if specifications is None:
            return [plugin_quartic(p.beta11), plugin_quartic(p.beta22)]

        plugins = []
        for specification in specifications:
            arguments = dict(specification)
            plugins.append(NONLINEARITY_PLUGINS[arguments.pop("name")](**arguments))

        return plugins

    def build_spec(self, overrides: dict) -> BecSpec:
        """Creates the BecSpec of one sweep point.

        Args:
            overrides (dict): Swept parameter values of the point.

        Returns:
            spec (BecSpec): Physical description.
        """
        try:
            if "preset" in self.problem:
                return self._preset_spec(overrides)

            return self._explicit_spec(overrides)
        except ConfigError:
            raise
        except (BecGroundError, ValueError, TypeError) as error:
            raise ConfigError(str(error), field="problem") from error

    def _preset_spec(self, overrides: dict) -> BecSpec:
        name = self.problem["preset"]
        if name not in PRESETS:
            raise ConfigError(f"Unknown preset. Supported presets are {list(PRESETS)}.", field="problem.preset")

        return PRESETS[name](**{**self.problem.get("parameters", {}), **overrides})

    def _explicit_spec(self, overrides: dict) -> BecSpec:
        family = FAMILY_NAMES[self.problem.get("family", "spin_half")]
        names = INTERACTION_NAMES[family]

        interactions = dict(self.problem.get("interactions", {}))
        interactions.update({key: value for key, value in overrides.items() if key in names})
        missing = [name for name in names if name not in interactions]
        if missing:
            raise ConfigError("Missing interaction coefficient.", field=f"problem.interactions.{missing[0]}")

        unknown = [key for key in overrides if key not in names and key not in ("alpha", "magnetization", "n")]
        if unknown:
            raise ConfigError("Swept parameter is not a field of the problem.", field=f"sweep.{unknown[0]}")

        return BecSpec(
            family=family,
            domain=Domain(lower=tuple(self.problem["lower"]), upper=tuple(self.problem["upper"])),
            n=overrides.get("n", self.problem["n"]),
            scheme=Scheme(str(self.problem.get("scheme", "fd")).upper()),
            potential=self._potential(),
            interactions=tuple(interactions[name] for name in names),
            alpha=overrides.get("alpha", self.problem.get("alpha")),
            magnetization=overrides.get("magnetization", self.problem.get("magnetization")),
            zeeman=tuple(self.problem.get("zeeman", (0.0, 0.0))),
            label=self.problem.get("label", ""),
        )

    def _potential(self) -> object:
        arguments = dict(self.problem.get("potential", {"kind": "harmonic_lattice"}))
        kind = arguments.pop("kind", "harmonic_lattice")
        if kind not in POTENTIAL_KINDS:
            raise ConfigError(
                f"Unknown potential kind. Supported kinds are {list(POTENTIAL_KINDS)}.",
                field="problem.potential.kind",
            )

        return POTENTIAL_KINDS[kind](**arguments)
