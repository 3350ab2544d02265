"""High-level Python API for building and analyzing quantum codes."""

from __future__ import annotations

import time
from pathlib import Path
from typing import Any

from .bounds import BoundsReport, theoretical_bounds
from .classical import circulant
from .config import get_settings, tool_version
from .constructions import (
    CssCode,
    HyperbicycleSpec,
    NonCssCode,
    bicycle_K,
    generalized_bicycle,
    haah_code,
    hyperbicycle,
    hypergraph_product,
    noncss_hyperbicycle,
    repeated_cyclic_inputs,
    spec_from_matrices,
    symmetric_pair_noncss,
)
from .distance import DistanceResult, css_distance, noncss_distance
from .errors import ParseError
from .exporters import get_exporter, write_witness
from .gf2 import BinMat
from .logging import get_logger
from .logicals import LogicalBasis, logical_operators
from .models import (
    AnalysisReport,
    BoundsModel,
    CodeSpecModel,
    DistanceModel,
    FileBlock,
    KReportModel,
)
from .parser import (
    load_code_file,
    load_spec,
    model_from_spec,
    parse_polynomial,
    read_matrix,
    resolve_block,
    spec_from_model,
)
from .poly import BinPoly
from .symmetry import Kreport, count_logical_qubits, noncss_K, rank_formula_check

log = get_logger(__name__)


class QuantumCode:
    """A CSS or non-CSS code together with the hyperbicycle inputs it came from, if any.

    This is the main entry point of the Python API. It also implements the exporters'
    `CodeProvider` protocol, so any exporter can write it.

    Examples:
        # Build from a JSON spec and analyze
        code = QuantumCode.from_spec_file("spec.json")
        report = code.analyze()
        print(report.k, report.distance.interval)

        # Build a generalized bicycle code directly
        code = QuantumCode.from_model(
            CodeSpecModel(family="generalized-bicycle", f1="1+x^3", f2="x+x^2", n=5)
        )
    """

    def __init__(
        self,
        code: CssCode | NonCssCode,
        spec: HyperbicycleSpec | None = None,
        k_checks: dict[str, int] | None = None,
    ):
        """Initialize from an already built code.

        Args:
            code: The stabilizer code
            spec: Hyperbicycle inputs reproducing `code` exactly, when known
            k_checks: Independent K values keyed by method, compared against the rank K
        """
        self.code = code
        self.spec = spec
        self.k_checks = k_checks or {}

    # -- constructors --

    @classmethod
    def from_model(cls, model: CodeSpecModel, base_dir: str | Path = ".") -> QuantumCode:
        """Build the code a spec document describes.

        Args:
            model: Validated spec
            base_dir: Directory that ``{"file": ...}`` blocks are relative to

        Returns:
            The constructed code

        Raises:
            HyperbicycleError: If the inputs are inconsistent (dimensions, commensurate
                c and chi, non-commuting checks)
        """
        base = Path(base_dir)
        family = model.family
        if family == "hyperbicycle":
            spec = spec_from_model(model, base)
            return cls(hyperbicycle(spec), spec)
        if family == "noncss-hyperbicycle":
            spec = spec_from_model(model, base)
            return cls(noncss_hyperbicycle(spec), spec)
        if family == "repeated-cyclic":
            assert model.c is not None and model.n1 is not None and model.n2 is not None
            spec = repeated_cyclic_inputs(
                parse_polynomial(str(model.h1), "h1"),
                model.n1,
                parse_polynomial(str(model.h2), "h2"),
                model.n2,
                model.c,
                model.chi,
                model.name,
            )
            return cls(hyperbicycle(spec), spec)
        if family in ("generalized-bicycle", "symmetric-bicycle"):
            assert model.n is not None
            f1 = parse_polynomial(str(model.f1), "f1")
            f2 = parse_polynomial(str(model.f2), "f2")
            bk = bicycle_K(f1, f2, model.n)
            if family == "generalized-bicycle":
                return cls(
                    generalized_bicycle(f1, f2, model.n),
                    k_checks={"gcd": bk.k, "singleGenerator": bk.k_single_generator},
                )
            # the CSS double of the symmetric pair is the bicycle code of (f1, f2)
            return cls(symmetric_pair_noncss(f1, f2, model.n), k_checks={"doubledGcd": bk.k // 2})
        if family == "hypergraph-product":
            H1 = _matrix_input(model.h1, model.n, base, "h1")
            H2 = _matrix_input(model.h2, model.n, base, "h2")
            return cls(hypergraph_product(H1, H2), spec_from_matrices(H1, H2))
        assert model.variant is not None and model.L is not None
        return cls(haah_code(model.variant, model.L))

    @classmethod
    def from_spec_file(cls, path: str | Path) -> QuantumCode:
        """Build from a JSON spec file; file blocks resolve relative to it."""
        path = Path(path)
        return cls.from_model(load_spec(path), path.parent)

    @classmethod
    def from_code_file(cls, path: str | Path) -> QuantumCode:
        """Load a code previously written with the json or yaml exporter."""
        code, spec = load_code_file(path)
        return cls(code, spec, _k_checks_from_provenance(code))

    @classmethod
    def from_matrix_files(
        cls, gx: str | Path | None = None, gz: str | Path | None = None, h: str | Path | None = None
    ) -> QuantumCode:
        """Load check matrices from dense01 or alist files: either gx and gz, or h."""
        if h is not None:
            return cls(NonCssCode(read_matrix(h), {"family": "custom", "source": str(h)}))
        if gx is None or gz is None:
            raise ParseError("need both --gx and --gz, or --h")
        prov = {"family": "custom", "source": f"{gx}, {gz}"}
        return cls(CssCode(read_matrix(gx), read_matrix(gz), prov))

    # -- properties --

    @property
    def kind(self) -> str:
        return "css" if isinstance(self.code, CssCode) else "noncss"

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def family(self) -> str:
        return self.code.family

    # -- CodeProvider --

    def get_matrix_names(self) -> list[str]:
        return ["gx", "gz"] if isinstance(self.code, CssCode) else ["h"]

    def get_matrix(self, name: str) -> BinMat:
        if isinstance(self.code, CssCode) and name in ("gx", "gz"):
            return self.code.gx if name == "gx" else self.code.gz
        if isinstance(self.code, NonCssCode) and name == "h":
            return self.code.h
        raise ValueError(f"Matrix '{name}' not found. Available: {', '.join(self.get_matrix_names())}")

    def get_metadata(self) -> dict[str, Any]:
        split = self.code.split if isinstance(self.code, CssCode) else None
        meta: dict[str, Any] = {
            "toolVersion": tool_version(),
            "kind": self.kind,
            "n": self.n,
            "provenance": dict(self.code.provenance),
            "split": split,
        }
        if self.spec is not None:
            family = "hyperbicycle" if self.kind == "css" else "noncss-hyperbicycle"
            meta["spec"] = model_from_spec(self.spec, family)
        return meta

    # -- analysis --

    def k_report(self) -> Kreport:
        """Ranks and K, plus the symmetry-class values for CSS hyperbicycle inputs."""
        if not isinstance(self.code, CssCode):
            raise ValueError("k_report needs a CSS code")
        return count_logical_qubits(self.code, self._css_spec())

    def distance(
        self,
        budget: int | None = None,
        rand_iters: int | None = None,
        seed: int | None = None,
        workers: int | None = None,
    ) -> DistanceResult:
        """Distance interval with a verified witness.

        Examples:
            result = code.distance(seed=7)
            print(result.interval_str(), result.methods)
        """
        kwargs = dict(budget=budget, rand_iters=rand_iters, seed=seed, workers=workers)
        if isinstance(self.code, CssCode):
            return css_distance(self.code, spec=self._css_spec(), **kwargs)
        spec = self.spec if self.family == "noncss-hyperbicycle" else None
        return noncss_distance(self.code, spec=spec, **kwargs)

    def bounds(self, seed: int | None = None) -> BoundsReport | None:
        """Theoretical distance bounds, when the code has hyperbicycle inputs."""
        if self.spec is None:
            return None
        return theoretical_bounds(self.spec, seed=seed)

    def logicals(self) -> LogicalBasis:
        if not isinstance(self.code, CssCode):
            raise ValueError("paired X/Z logical operators need a CSS code")
        return logical_operators(self.code, self._css_spec())

    def analyze(
        self,
        budget: int | None = None,
        rand_iters: int | None = None,
        seed: int | None = None,
        workers: int | None = None,
        with_distance: bool = True,
        with_bounds: bool = True,
    ) -> AnalysisReport:
        """Run every applicable computation and cross-check.

        Args:
            budget: Meet-in-the-middle half-set budget
            rand_iters: Randomized search iterations
            seed: Seed for randomized search (defaults to the configured seed)
            workers: Worker processes for randomized search
            with_distance: Compute the distance interval
            with_bounds: Compute theoretical bounds (hyperbicycle inputs only)

        Returns:
            The report; `report.ok` is False when any cross-check failed

        Examples:
            report = QuantumCode.from_spec_file("spec.json").analyze(seed=1)
            Path("report.json").write_text(report.model_dump_json(by_alias=True, indent=2))
        """
        seed = get_settings().seed if seed is None else seed
        timings: dict[str, float] = {}
        checks: dict[str, bool] = {}

        start = time.perf_counter()
        k_model = None
        if isinstance(self.code, CssCode):
            spec = self._css_spec()
            kr = count_logical_qubits(self.code, spec)
            ranks = rank_formula_check(spec, self.code) if spec is not None else None
            if kr.k_class_sum is not None:
                checks["kClassSum"] = kr.k_class_sum == kr.k_rank
                checks["kSymmetricForm"] = kr.k_symmetric_form == kr.k_rank
            if ranks is not None:
                checks["rankFormula"] = ranks.ok
            k_model = KReportModel.from_report(kr, ranks)
        elif self.spec is not None and self.family == "noncss-hyperbicycle":
            checks["kClasses"] = noncss_K(self.code, self.spec).ok
        for name, value in self.k_checks.items():
            checks[f"k_{name}"] = value == self.k
        timings["dimension"] = round(time.perf_counter() - start, 4)

        dist = None
        if with_distance:
            start = time.perf_counter()
            dist = self.distance(budget, rand_iters, seed, workers)
            timings["distance"] = round(time.perf_counter() - start, 4)

        bounds_model = None
        if with_bounds and self.spec is not None:
            start = time.perf_counter()
            rep = theoretical_bounds(self.spec, seed=seed)
            bounds_model = BoundsModel.from_report(rep)
            if dist is not None and dist.applicable:
                lo, hi, _ = rep.css_interval() if self.kind == "css" else rep.noncss_interval()
                checks["boundsConsistent"] = lo <= dist.d_hi and dist.d_lo <= hi
            timings["bounds"] = round(time.perf_counter() - start, 4)

        report = AnalysisReport(
            tool_version=tool_version(),
            seed=seed,
            kind=self.kind,  # type: ignore[arg-type]
            provenance=dict(self.code.provenance),
            n=self.n,
            k=self.k,
            k_report=k_model,
            distance=DistanceModel.from_result(dist) if dist is not None else None,
            bounds=bounds_model,
            cross_checks=checks,
            timings=timings,
        )
        if not report.ok:
            failed = [name for name, ok in checks.items() if not ok]
            log.warning("cross-checks failed: %s", ", ".join(failed))
        return report

    # -- export --

    def export(self, output_path: str | Path, format: str = "json") -> list[Path]:
        """Write the code in any supported format.

        Args:
            output_path: Target file (json, yaml) or base name (dense01, alist, csv)
            format: 'dense01', 'alist', 'json', 'yaml' or 'csv'

        Returns:
            The files written

        Examples:
            code.export("out/code.json")
            code.export("out/code", format="alist")  # out/code_gx.alist, out/code_gz.alist
        """
        return get_exporter(self, format).export_code(Path(output_path))

    def export_witness(self, output_path: str | Path, result: DistanceResult) -> None:
        if result.witness is None:
            raise ValueError("distance result carries no witness")
        write_witness(result.witness, Path(output_path), result.split)

    def _css_spec(self) -> HyperbicycleSpec | None:
        """The spec, when it describes this CSS code qubit for qubit."""
        if self.spec is None or self.family not in ("hyperbicycle", "hypergraph-product"):
            return None
        return self.spec if self.spec.n_qubits == self.n else None

    def __repr__(self) -> str:
        return f"QuantumCode({self.family}, [[{self.n},{self.k}]])"


def _k_checks_from_provenance(code: CssCode | NonCssCode) -> dict[str, int]:
    """Recover the gcd-based K checks of a bicycle code from its recorded polynomials."""
    prov = code.provenance
    if code.family != "generalized-bicycle" or not {"f1", "f2", "n"} <= prov.keys():
        return {}
    bk = bicycle_K(BinPoly.parse(str(prov["f1"])), BinPoly.parse(str(prov["f2"])), int(prov["n"]))
    return {"gcd": bk.k, "singleGenerator": bk.k_single_generator}


def _matrix_input(
    value: list[str] | FileBlock | str | None, n: int | None, base: Path, field: str
) -> BinMat:
    """A hypergraph-product input: explicit rows, a file, or a polynomial with n."""
    if isinstance(value, str):
        if n is None:
            raise ParseError(f"{field}: a polynomial input needs 'n'")
        return circulant(n, parse_polynomial(value, field))
    if value is None:
        raise ParseError(f"{field} is required")
    return resolve_block(value, base)


# Convenience functions for quick access
def load_code(path: str | Path) -> QuantumCode:
    """Load a code from a JSON spec (``"family"`` key) or a json/yaml code file.

    Example:
        code = load_code("spec.json")
    """
    path = Path(path)
    if path.suffix == ".json" and '"family"' in path.read_text(encoding="utf-8")[:4096]:
        try:
            return QuantumCode.from_spec_file(path)
        except ParseError:
            log.debug("%s is not a spec; trying it as a code file", path)
    return QuantumCode.from_code_file(path)


def analyze_spec(path: str | Path, **kwargs) -> AnalysisReport:
    """Quick analysis of a spec file.

    Example:
        report = analyze_spec("spec.json", seed=3)
        print(report.distance.interval)
    """
    return QuantumCode.from_spec_file(path).analyze(**kwargs)


def code_parameters(code: CssCode | NonCssCode, **kwargs) -> tuple[int, int, str]:
    """(N, K, distance interval text) of an already built code."""
    qc = QuantumCode(code)
    return qc.n, qc.k, qc.distance(**kwargs).interval_str()
