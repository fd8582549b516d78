#!/usr/bin/env python3
"""
Riordan Numerator Toolkit
Polinomi numeratori delle diagonali di array di Riordan, operatori finiti e check esatti
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

# Add current path for imports
sys.path.append(str(Path(__file__).parent))

from algebra.exact_core import ArgumentError, RiordanError, as_rational  # noqa: E402
from algebra.series import default_order  # noqa: E402
from arrays.lagrange import lagrange_associate  # noqa: E402
from arrays.riordan import (  # noqa: E402
    ArrayFlavor,
    SeriesPair,
    euler_poly,
    narayana_b_poly,
    narayana_poly,
    numerator,
)
from arrays.transforms import MatrixName, build, parse_tag  # noqa: E402
from config.check_catalog import PREDEFINED_CHECKS, all_check_ids  # noqa: E402
from config.settings import RiordanConfig  # noqa: E402
from utils.output_doc import (  # noqa: E402
    OutputDoc,
    matrix_doc,
    numerator_doc,
    polynomial_doc,
    report_doc,
    series_doc,
)
from utils.series_spec import SeriesSpecError, resolve_series  # noqa: E402
from verify.check_engine import CheckEngine  # noqa: E402

logger = logging.getLogger("riordan")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERRUPTED = 0, 1, 2, 130


def _rational_arg(text: str):
    try:
        return as_rational(text.strip())
    except ArgumentError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _rational_list_arg(text: str):
    return tuple(_rational_arg(item) for item in text.split(",") if item.strip())


def _index_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"index must be >= 0, got {value}")
    return value


class RiordanToolkit:
    """Classe principale: risolve gli argomenti e produce i documenti di output"""

    def __init__(self, config_file: Optional[str] = None):
        self.config = RiordanConfig.from_file(config_file) if config_file else RiordanConfig()
        self.engine = CheckEngine(self.config)

    def _order(self, n: int) -> int:
        return default_order(n, self.config.guard)

    # --- polinomi -------------------------------------------------------------------
    def euler(self, n: int) -> OutputDoc:
        return polynomial_doc(euler_poly(n), f"A_{n}")

    def narayana(self, n: int) -> OutputDoc:
        return polynomial_doc(narayana_poly(n), f"N_{n}")

    def narayana_b(self, n: int) -> OutputDoc:
        return polynomial_doc(narayana_b_poly(n), f"BN_{n}")

    def diagonal_numerator(self, series: str, n: int, flavor: ArrayFlavor, b: str = "1") -> OutputDoc:
        """Numeratore della diagonale n di (b, x a)"""
        order = self._order(n)
        pair = SeriesPair(resolve_series(b, order), resolve_series(series, order))
        result = numerator(pair, flavor, n, order=order, guard=self.config.guard)
        symbol = "g" if flavor is ArrayFlavor.ORDINARY else "h"
        if b.strip() == "1":
            symbol = "alpha" if flavor is ArrayFlavor.ORDINARY else "phi"
        return numerator_doc(result, f"{symbol}_{n}")

    # --- matrici e serie ---------------------------------------------------------------
    def matrix(self, token: str, n: int, beta=None) -> OutputDoc:
        name = MatrixName(parse_tag(token), n, beta)
        return matrix_doc(name.label(), build(name))

    def series(self, spec: str, order: int) -> OutputDoc:
        return series_doc(resolve_series(spec, order), spec.strip())

    def lagrange(self, spec: str, beta, phi, order: int) -> OutputDoc:
        base = resolve_series(spec, order)
        label = f"({beta}){spec.strip()}^{phi}"
        return series_doc(lagrange_associate(base, beta, phi, order), label)

    # --- check ---------------------------------------------------------------------------
    def run_checks(self, ids: List[str], args: argparse.Namespace) -> OutputDoc:
        params = self.config.to_check_params(
            max_n=args.max_n,
            matrix_max_n=args.matrix_max_n,
            beta_grid=args.beta_grid,
            guard=args.guard,
        )
        reports = self.engine.run_suite(ids or None, params, workers=args.workers)
        if args.report_dir:
            self.engine.save_reports(args.report_dir)
        return report_doc(reports, params.to_dict())


def build_parser() -> argparse.ArgumentParser:
    """Parser con sottocomandi; le opzioni globali valgono prima o dopo il sottocomando"""
    def add_globals(target: argparse.ArgumentParser, suppress: bool):
        default = argparse.SUPPRESS if suppress else None
        target.add_argument("--json", action="store_true",
                            default=argparse.SUPPRESS if suppress else False,
                            help="Documento JSON canonico su stdout")
        target.add_argument("--config", type=str, default=default,
                            help="File di configurazione JSON o YAML")
        target.add_argument("--verbose", "-v", action="store_true",
                            default=argparse.SUPPRESS if suppress else False,
                            help="Output verboso (log DEBUG su stderr)")

    parser = argparse.ArgumentParser(
        description="📐 Riordan Numerator Toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Esempi di utilizzo:
  python main.py euler 4                            # A_4 = x + 11x^2 + 11x^3 + x^4
  python main.py gep --series catalan --n 3         # alpha_3 della serie di Catalan
  python main.py gnp --series "1/(1-x)" --n 4       # (n+1)! N_n
  python main.py matrix Stilde 2                    # S~_2
  python main.py matrix G --n 3 --beta -1           # G_3^-1
  python main.py lagrange --series onepx --beta 2 --phi 1 --order 8
  python main.py check                              # batteria completa
  python main.py check T4 T7 T12 T16 --max-n 8      # fattorizzazioni
        """,
    )
    add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    for name, text in (("euler", "Polinomio di Eulero A_N"),
                       ("narayana", "Polinomio di Narayana N_N"),
                       ("narayana-b", "Polinomio di Narayana di tipo B")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("n", type=_index_arg, metavar="N")

    for name, text in (("gep", "Numeratore ordinario alpha_n di (1, x a)"),
                       ("gnp", "Numeratore esponenziale phi_n di (1, x a)")):
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("--series", required=True, help="Serie a(x) nel mini-linguaggio")
        cmd.add_argument("--n", type=_index_arg, required=True)

    cmd = sub.add_parser("numerator", parents=[common], help="Numeratore della diagonale n di (b, x a)")
    cmd.add_argument("--series", required=True)
    cmd.add_argument("--b", default="1", help="Prefattore b(x) (default: 1)")
    cmd.add_argument("--n", type=_index_arg, required=True)
    cmd.add_argument("--flavor", choices=[f.value for f in ArrayFlavor], default=ArrayFlavor.ORDINARY.value)

    cmd = sub.add_parser("matrix", parents=[common], help="Operatore finito per nome")
    cmd.add_argument("name", metavar="NAME")
    cmd.add_argument("n_pos", nargs="?", type=_index_arg, metavar="N")
    cmd.add_argument("--n", type=_index_arg, dest="n_opt")
    cmd.add_argument("--beta", type=_rational_arg)

    cmd = sub.add_parser("series", parents=[common], help="Espansione troncata di una serie")
    cmd.add_argument("spec", metavar="SPEC")
    cmd.add_argument("--order", type=_index_arg, default=10)

    cmd = sub.add_parser("lagrange", parents=[common], help="Serie associata (beta)a^phi")
    cmd.add_argument("--series", required=True)
    cmd.add_argument("--beta", type=_rational_arg, required=True)
    cmd.add_argument("--phi", type=_rational_arg, default=1)
    cmd.add_argument("--order", type=_index_arg, default=10)

    cmd = sub.add_parser("check", parents=[common], help="Esegue i check del catalogo")
    cmd.add_argument("ids", nargs="*", metavar="ID")
    cmd.add_argument("--max-n", type=_index_arg)
    cmd.add_argument("--matrix-max-n", type=_index_arg)
    cmd.add_argument("--beta-grid", type=_rational_list_arg, help="Lista separata da virgole, es. -1,1/2,2")
    cmd.add_argument("--guard", type=int)
    cmd.add_argument("--workers", type=int)
    cmd.add_argument("--report-dir", type=str, help="Salva report JSON e markdown")
    cmd.add_argument("--list", action="store_true", help="Elenca i check del catalogo")
    return parser


def setup_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
    )


def _list_checks(as_json: bool, console: Console):
    rules = [PREDEFINED_CHECKS[check_id] for check_id in all_check_ids()]
    if as_json:
        print(json.dumps([{"check_id": r.check_id, "name": r.name, "category": r.category.value}
                          for r in rules], sort_keys=True, separators=(",", ":")))
        return
    table = Table(title="📋 Check catalog")
    table.add_column("id")
    table.add_column("category")
    table.add_column("name")
    for rule in rules:
        table.add_row(rule.check_id, rule.category.value, rule.name)
    console.print(table)


def dispatch(toolkit: RiordanToolkit, args: argparse.Namespace) -> OutputDoc:
    command = args.command
    if command == "euler":
        return toolkit.euler(args.n)
    if command == "narayana":
        return toolkit.narayana(args.n)
    if command == "narayana-b":
        return toolkit.narayana_b(args.n)
    if command in ("gep", "gnp"):
        flavor = ArrayFlavor.ORDINARY if command == "gep" else ArrayFlavor.EXPONENTIAL
        return toolkit.diagonal_numerator(args.series, args.n, flavor)
    if command == "numerator":
        return toolkit.diagonal_numerator(args.series, args.n, ArrayFlavor(args.flavor), args.b)
    if command == "matrix":
        n = args.n_opt if args.n_opt is not None else args.n_pos
        if n is None:
            raise ArgumentError("matrix needs N (positional or --n)")
        return toolkit.matrix(args.name, n, args.beta)
    if command == "series":
        return toolkit.series(args.spec, args.order)
    if command == "lagrange":
        return toolkit.lagrange(args.series, args.beta, args.phi, args.order)
    raise ArgumentError(f"unknown command {command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    """Funzione principale: ritorna l'exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    console, err_console = Console(), Console(stderr=True)

    try:
        toolkit = RiordanToolkit(args.config)
        if args.command == "check":
            if args.list:
                _list_checks(args.json, console)
                return EXIT_OK
            doc = toolkit.run_checks(args.ids, args)
            failed = any(r["status"] != "pass" for r in doc.payload["reports"])
            exit_code = EXIT_FAIL if failed else EXIT_OK
        else:
            doc = dispatch(toolkit, args)
            exit_code = EXIT_OK

        if args.json:
            print(doc.to_json())
        else:
            doc.render(console)
        return exit_code

    except SeriesSpecError as e:
        err_console.print(f"❌ {e}")
        err_console.print(f"   expected: {', '.join(sorted(e.expected))}")
        return EXIT_USAGE
    except RiordanError as e:
        err_console.print(f"❌ {type(e).__name__}: {e}")
        return EXIT_USAGE
    except KeyboardInterrupt:
        err_console.print("\n🛑 Interrotto dall'utente")
        return EXIT_INTERRUPTED
    except Exception as e:
        err_console.print(f"\n❌ Errore inatteso: {e}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
