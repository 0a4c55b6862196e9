# Copyright (c) The pseudounitary developers. All Rights Reserved.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import sys
import argparse
from pathlib import Path
from concurrent import futures
from typing import Any, Dict, List, Optional, Sequence
from ..common.typetools import PathLike, ExecutorLike, JobLike
from ..matcore import DEFAULT_TOL
from . import commands


def launch(command: str, inputs: Sequence[PathLike], options: Dict[str, Any], output: Optional[PathLike] = None,
           matrix_dir: Optional[PathLike] = None) -> int:
    """Runs a command on explicit input files. The document is printed if no output path is provided.
    Matrices go to matrix_dir (default: the folder of the output, or of the first input).
    """
    outcome = commands.execute(command, inputs, options)
    if matrix_dir is None:
        matrix_dir = Path(output).parent if output is not None else (Path(inputs[0]).parent if inputs else Path("."))
    stem = Path(inputs[0]).stem if inputs else command
    commands.write_outcome(outcome, output, matrix_dir, stem)
    if output is None:
        print(commands.dumps(outcome.document), end="")
    return outcome.exit_code


def compute(command: str, paths: Sequence[Path], options: Dict[str, Any],
            executor: Optional[ExecutorLike] = None) -> List[commands.Outcome]:
    """Outcomes of a command on each file, computed in order or through the executor
    """
    if executor is None:
        return [commands.execute(command, [path], options) for path in paths]
    jobs: List[JobLike[commands.Outcome]] = [executor.submit(commands.execute, command, [path], options) for path in paths]
    return [job.result() for job in jobs]


def _batch_files(folder: Path) -> List[Path]:
    return sorted(p for p in folder.iterdir() if p.is_file() and p.suffix.lower() in (".json", ".csv"))


def batch_launch(command: str, folder: PathLike, options: Dict[str, Any], output: Optional[PathLike] = None,
                 matrix_dir: Optional[PathLike] = None, num_workers: int = 1, quiet: bool = False) -> int:
    """Runs a command on each matrix file of a folder, writing <stem>.<command>.json documents and
    a summary.<command>.csv table in the output folder (default: <folder>/<command>).
    Errors are isolated per file; the exit code is the largest one.
    """
    folder = Path(folder)
    output_dir = folder / command if output is None else Path(output)
    output_dir.mkdir(parents=True, exist_ok=True)
    matrix_dir = output_dir if matrix_dir is None else Path(matrix_dir)
    paths = _batch_files(folder)
    if not quiet:
        print(f"Running {command} on {len(paths)} file(s) from {folder}", flush=True)
    if num_workers == 1:
        outcomes = compute(command, paths, options)
    else:
        with futures.ProcessPoolExecutor(max_workers=num_workers) as executor:
            outcomes = compute(command, paths, options, executor=executor)
    rows = []
    for k, (path, outcome) in enumerate(zip(paths, outcomes)):
        commands.write_outcome(outcome, output_dir / f"{path.stem}.{command}.json", matrix_dir, path.stem)
        rows.append(commands.summary_row(path, outcome))
        if not quiet:
            print(f"[{k + 1}/{len(paths)}] {path.name}: {outcome.document['status']}", flush=True)
    summary = commands.summarize(rows)
    summary_path = output_dir / f"summary.{command}.csv"
    summary.to_csv(summary_path, index=False)
    if not quiet:
        print(summary.to_text())
        print(f"Saved summary to {summary_path}", flush=True)
    return max((o.exit_code for o in outcomes), default=0)


def _complex(text: str) -> complex:
    return complex(text.replace(" ", ""))


def get_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description='Decide pseudo-unitarity, build metric operators and logarithms of matrix files.',
                                     prog="python -m pseudounitary.cli")
    parser.add_argument('command', type=str, choices=sorted(commands.registry),
                        help="; ".join(f"{name}: {commands.registry.get_info(name)['help']}" for name in sorted(commands.registry)))
    parser.add_argument('inputs', type=str, nargs="*",
                        help="matrix file(s), or a folder of matrix files for batch processing (verify takes U and eta)")
    parser.add_argument('--tol', type=float, default=None,
                        help=f"base tolerance of the input matrices, overriding their \"tol\" field (default: the field, else {DEFAULT_TOL})")
    parser.add_argument('--format', type=str, default=None, choices=["text", "csv"], dest="fmt",
                        help="format of the matrix files (default: csv for the .csv suffix, text otherwise)")
    parser.add_argument('--output', type=str, default=None,
                        help="path of the output document (default: stdout), or output folder in batch mode")
    parser.add_argument('--matrix-dir', type=str, default=None, dest="matrix_dir",
                        help="folder for the matrix outputs <stem>.eta.json, <stem>.eta_inv.json, <stem>.log.json")
    parser.add_argument('--quiet', action="store_true", help="do not print batch progress")
    parser.add_argument('--num-workers', type=int, default=1, dest="num_workers",
                        help="number of processes used in batch mode")
    # metric
    parser.add_argument('--rho', type=float, nargs="+", default=None,
                        help="anti-diagonal scales of the unimodular blocks, in block order (default 1)")
    parser.add_argument('--sign', type=int, nargs="+", default=None, choices=[-1, 1],
                        help="signs of the unimodular blocks, in block order (default 1)")
    parser.add_argument('--seed-column', type=str, nargs="+", default=None, dest="seed_column",
                        help="last column of the first paired block (complex entries such as 1+2j)")
    # oscillator
    parser.add_argument('--omega-sq', type=float, default=1.0, dest="omega_sq", help="squared frequency")
    parser.add_argument('--lambda', type=float, default=1.0, dest="lam", help="time scale")
    parser.add_argument('--hbar', type=float, default=1.0, help="action unit")
    parser.add_argument('--x0', type=_complex, default=1.0, help="initial position")
    parser.add_argument('--v0', type=_complex, default=0.0, help="initial velocity")
    parser.add_argument('--t-max', type=float, default=10.0, dest="t_max", help="final time")
    parser.add_argument('--steps', type=int, default=101, help="number of time points in [0, t_max]")
    parser.add_argument('--eta', type=str, default="sigma3",
                        help="metric used for the inner products: sigma3, auto (built from the propagator) or a matrix file")
    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = get_args(argv)
    info = commands.registry.get_info(args.command)
    options: Dict[str, Any] = {"tol": args.tol, "fmt": args.fmt}
    options.update({name: getattr(args, name) for name in info.get("options", ())})
    if len(args.inputs) == 1 and Path(args.inputs[0]).is_dir():
        if not info["batch"]:
            print(f"Command {args.command} does not support folders", file=sys.stderr)
            return commands.Status.INPUT_ERROR.value
        return batch_launch(args.command, args.inputs[0], options, output=args.output, matrix_dir=args.matrix_dir,
                            num_workers=args.num_workers, quiet=args.quiet)
    return launch(args.command, args.inputs, options, output=args.output, matrix_dir=args.matrix_dir)


if __name__ == "__main__":
    sys.exit(main())
