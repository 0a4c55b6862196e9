# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import enum
import json
import hashlib
import warnings
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Sequence
import numpy as np
from ..common.decorators import Registry
from ..common.typetools import PathLike
from ..common import errors
from ..common import tools
from ..matcore import CMatrix, jordan_structure, DEFAULT_TOL
from .. import pseudospec
from .. import metric
from .. import logmap
from .. import canon2
from .. import sympl
from .. import oscsim
from . import matrixfile


SCHEMA = "pseudounitary.verdict/1"
registry: Registry[Any] = Registry(prefix="cmd_")


class Status(enum.Enum):
    PASS = 0
    NEGATIVE = 1
    INPUT_ERROR = 2
    NUMERICAL_ERROR = 3


class Outcome(NamedTuple):
    """Everything a command computed: the verdict document and the matrices to be written
    (file suffix -> matrix). Nothing is written before the whole outcome is available.
    """
    status: Status
    document: Dict[str, Any]
    matrices: Dict[str, CMatrix]

    @property
    def exit_code(self) -> int:
        return self.status.value


class Result(NamedTuple):
    status: Status
    payload: Dict[str, Any]
    residuals: Dict[str, float]
    matrices: Optional[Dict[str, CMatrix]] = None
    tol: Optional[float] = None  # tolerance of the matrices actually processed


def jsonable(obj: Any) -> Any:
    """Converts numpy, complex and enum values to JSON serializable data ([re, im] for complex numbers)
    """
    if isinstance(obj, dict):
        return {str(key): jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, np.generic):
        obj = obj.item()
    if isinstance(obj, complex):
        return tools.complex_to_pair(obj)
    return obj


def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(jsonable(document), sort_keys=True, indent=2) + "\n"


def input_digest(inputs: Sequence[PathLike], parameters: Dict[str, Any]) -> str:
    """sha256 of the input files, or of the parameters for commands without input files
    """
    digest = hashlib.sha256()
    for path in inputs:
        digest.update(Path(path).read_bytes())
    if not inputs:
        digest.update(json.dumps(jsonable(parameters), sort_keys=True).encode())
    return digest.hexdigest()


def _version() -> str:
    from .. import __version__  # pylint: disable=import-outside-toplevel
    return __version__


def _read(path: PathLike, options: Dict[str, Any]) -> CMatrix:
    return matrixfile.read_matrix_file(path, fmt=options.get("fmt"), tol=options.get("tol"))


def _status(decision: bool) -> Status:
    return Status.PASS if decision else Status.NEGATIVE


def _single(inputs: Sequence[PathLike], name: str) -> Path:
    if len(inputs) != 1:
        raise errors.BadParameter(f"Command {name} expects exactly one input file, got {len(inputs)}")
    return Path(inputs[0])


def _complex_list(values: Optional[Sequence[str]]) -> Optional[List[complex]]:
    if values is None:
        return None
    try:
        return [complex(v.replace(" ", "")) for v in values]
    except ValueError as e:
        raise errors.BadParameter(f"Could not parse complex values {list(values)} ({e})") from e


@registry.register_with_info(batch=True, help="decide pseudo-unitarity (spectral pairing and determinant modulus)")
def cmd_classify(inputs: Sequence[PathLike], options: Dict[str, Any]) -> Result:
    U = _read(_single(inputs, "classify"), options)
    pairing = pseudospec.pair_spectrum(jordan_structure(U))
    verdict = pairing.verdict()
    det = pseudospec.in_pseudo_special_group(U)
    payload = {"verdict": verdict.to_dict(), "unpaired": [u.eigenvalue for u in pairing.unpaired],
               "det_modulus": det.info["det_modulus"], "det_unimodular": det.decision,
               "pairing": pairing.table().to_dict(orient="records")}
    return Result(_status(verdict.decision), payload, {"pairing": verdict.residual, "det": det.residual}, tol=U.tol)


@registry.register_with_info(batch=True, options=("rho", "sign", "seed_column"),
                             help="build a metric operator eta (written with its inverse)")
def cmd_metric(inputs: Sequence[PathLike], options: Dict[str, Any]) -> Result:
    U = _read(_single(inputs, "metric"), options)
    seed = _complex_list(options.get("seed_column"))
    operator = metric.build_metric(jordan_structure(U), rhos=options.get("rho"), signs=options.get("sign"),
                                   paired_columns=None if seed is None else [seed])
    residual = operator.residual(U)
    p, q = operator.signature.signature
    payload = {"signature": [p, q], "group": operator.label,
               "blocks": [{"kind": t.kind, "eigenvalue": t.coefficients.u, "size": t.coefficients.p} for t in operator.terms]}
    return Result(Status.PASS, payload, {"witness": residual, "inverse": operator.inverse_residual()},
                  {"eta": operator.eta, "eta_inv": operator.eta_inverse}, tol=U.tol)


@registry.register_with_info(batch=True, help="pseudo-Hermitian logarithm H with U = e^{iH}")
def cmd_log(inputs: Sequence[PathLike], options: Dict[str, Any]) -> Result:
    U = _read(_single(inputs, "log"), options)
    result = logmap.pseudo_hermitian_log(U)
    payload = {"relocations": [{"original": r.original, "shift": r.shift, "relocated": r.relocated}
                               for r in result.relocations]}
    return Result(Status.PASS, payload, {"exponential": result.residual}, {"log": result.H}, tol=U.tol)


@registry.register_with_info(batch=True, help="canonical form of a 2 x 2 matrix")
def cmd_canon2(inputs: Sequence[PathLike], options: Dict[str, Any]) -> Result:
    U = _read(_single(inputs, "canon2"), options)
    form = canon2.canonical_form_2x2(U)
    payload: Dict[str, Any] = {"kind": form.kind, "metric_family": form.metric_family}
    if form.kind == canon2.FormKind.NOT_PSEUDO_UNITARY:
        payload["unpaired"] = form.witness
        return Result(Status.NEGATIVE, payload, {}, tol=U.tol)
    payload.update(theta=form.theta, phi=form.phi, r=form.r, unrestricted=form.unrestricted,
                   canonical=form.matrix(), transformer=form.transformer, log=canon2.log_2x2(form).data)
    return Result(Status.PASS, payload, {"similarity": form.residual}, tol=U.tol)


@registry.register_with_info(batch=True, help="symplectic checks and spectral quadruples")
def cmd_symplectic(inputs: Sequence[PathLike], options: Dict[str, Any]) -> Result:
    S = _read(_single(inputs, "symplectic"), options)
    report = sympl.is_symplectic(S)
    membership = sympl.sp_in_umm(S)
    payload = {"is_real": report.is_real, "is_symplectic": report.is_symplectic,
               "is_eta_j_pseudo_unitary": report.is_eta_j_pseudo_unitary, "ambient": membership.info["ambient"],
               "membership": membership.to_dict(),
               "quadruples": [{"orbit": q.orbit, "missing": q.missing, "mismatched": q.mismatched, "valid": q.valid,
                               "dimensions": [list(m.dimensions) for m in q.members]} for q in report.quadruples]}
    residuals = {"real": report.real_residual, "symplectic": report.symplectic_residual,
                 "eta_j": report.eta_j_residual, "det": report.det_check}
    decision = report.is_real and report.is_symplectic and all(q.valid for q in report.quadruples)
    return Result(_status(decision), payload, residuals, tol=S.tol)


@registry.register_with_info(batch=False, options=("omega_sq", "lam", "hbar", "x0", "v0", "t_max", "steps", "eta"),
                             help="simulate the two-level oscillator and its conserved inner product")
def cmd_oscillator(inputs: Sequence[PathLike], options: Dict[str, Any]) -> Result:
    if inputs:
        raise errors.BadParameter("Command oscillator takes no input file")
    model = oscsim.build_oscillator(options.get("omega_sq", 1.0), lam=options.get("lam", 1.0),
                                    hbar=options.get("hbar", 1.0), tol=options.get("tol") or DEFAULT_TOL)
    regime = oscsim.classify_oscillator(model)
    choice = options.get("eta", "sigma3")
    if choice == "sigma3":
        eta = CMatrix(np.diag([1.0, -1.0]), tol=model.tol)
    elif choice == "auto":
        eta = regime.metric
    else:
        eta = _read(choice, options)
    times = np.linspace(0, options.get("t_max", 10.0), options.get("steps", 101))
    x0, v0 = (complex(options.get(name, default)) for name, default in [("x0", 1.0), ("v0", 0.0)])
    states = oscsim.simulate(model, x0, v0, times)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", errors.MetricMismatchWarning)
        conservation = oscsim.conserved_inner_product(model, states, eta)
    table = oscsim.trajectory_table(states, conservation.values)
    payload = {"regime": {"kind": regime.kind, "diagonalizable": regime.diagonalizable,
                          "real_spectrum": regime.real_spectrum, "metric_family": regime.metric_family,
                          "groups": regime.groups},
               "eta": eta.data, "eta_valid": conservation.valid, "warnings": [str(w.message) for w in caught],
               "valid_metrics": [m.data for m in oscsim.valid_metrics(model)],
               "has_positive_metric": oscsim.positive_metric(model) is not None,
               "trajectory": {name: list(table.loc[:, name]) for name in table.columns}}
    return Result(_status(conservation.valid), payload, {"drift": conservation.drift}, tol=model.tol)


@registry.register_with_info(batch=False, help="check U^dagger eta U = eta for given U and eta files")
def cmd_verify(inputs: Sequence[PathLike], options: Dict[str, Any]) -> Result:
    if len(inputs) != 2:
        raise errors.BadParameter(f"Command verify expects two input files (U and eta), got {len(inputs)}")
    U, eta = (_read(path, options) for path in inputs)
    verdict = pseudospec.is_eta_pseudo_unitary(U, eta)
    group = metric.classify_group(eta).label
    return Result(_status(verdict.decision), {"verdict": verdict.to_dict(), "group": group}, {"witness": verdict.residual},
                  tol=U.tol)


def _error_payload(error: Exception) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"error": error.__class__.__name__, "message": str(error)}
    if isinstance(error, errors.NotPseudoUnitary):
        payload["unpaired"] = error.eigenvalues
    return payload


def execute(command: str, inputs: Sequence[PathLike], options: Dict[str, Any]) -> Outcome:
    """Runs a registered command and maps failures to statuses:
    NotPseudoUnitary -> NEGATIVE, InputError or unreadable file -> INPUT_ERROR,
    NumericalError -> NUMERICAL_ERROR. The outcome of a failure holds no matrix.
    """
    function = registry[command]
    parameters = {"tol": options.get("tol"),
                  **{key: value for key, value in sorted(options.items()) if key not in ("tol", "quiet")}}
    try:
        digest = input_digest(inputs, parameters)
    except OSError as e:
        return _outcome(command, "", parameters, Result(Status.INPUT_ERROR, _error_payload(e), {}))
    try:
        result = function(inputs, options)
    except errors.NotPseudoUnitary as e:
        result = Result(Status.NEGATIVE, _error_payload(e), {})
    except (errors.InputError, OSError, UnicodeDecodeError) as e:
        result = Result(Status.INPUT_ERROR, _error_payload(e), {})
    except errors.NumericalError as e:
        result = Result(Status.NUMERICAL_ERROR, _error_payload(e), {})
    return _outcome(command, digest, parameters, result)


def _outcome(command: str, digest: str, parameters: Dict[str, Any], result: Result) -> Outcome:
    if result.tol is not None:
        parameters = {**parameters, "tol": result.tol}
    document = {"schema": SCHEMA, "command": command, "input_digest": digest, "status": result.status.name.lower(),
                "exit_code": result.status.value, "payload": result.payload, "residuals": result.residuals,
                "parameters": parameters, "version": _version()}
    return Outcome(result.status, jsonable(document), dict(result.matrices or {}))


def write_outcome(outcome: Outcome, document_path: Optional[PathLike], matrix_dir: PathLike, stem: str) -> List[Path]:
    """Writes the matrices of an outcome as <stem>.<suffix>.json files in matrix_dir, then the document
    (to document_path, or nowhere if None). Returns the written paths.
    """
    written: List[Path] = []
    if outcome.matrices:
        Path(matrix_dir).mkdir(parents=True, exist_ok=True)
    for suffix, matrix in sorted(outcome.matrices.items()):
        path = Path(matrix_dir) / f"{stem}.{suffix}.json"
        matrixfile.write_matrix_file(path, matrix)
        written.append(path)
    if document_path is not None:
        Path(document_path).write_text(dumps(outcome.document))
        written.append(Path(document_path))
    return written


def summary_row(path: PathLike, outcome: Outcome) -> Dict[str, Any]:
    payload = outcome.document["payload"]
    return {"file": Path(path).name, "status": outcome.document["status"], "exit_code": outcome.exit_code,
            "message": payload.get("message", "")}


def summarize(rows: Sequence[Dict[str, Any]]) -> tools.Selector:
    return tools.Selector.from_rows(rows, columns=["file", "status", "exit_code", "message"])
