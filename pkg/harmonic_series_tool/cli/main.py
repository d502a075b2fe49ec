"""
Harmonic Series Tool - Main Entry Point

Command-line interface for verifying harmonic-number series identities.
"""
import argparse
import logging
import sys
from fractions import Fraction
from typing import Dict, List, Optional

import mpmath

from ..config.models import (SumMethod, VerificationPolicy,
                             identities_to_dataframe)
from ..config.settings import OutputMode, get_settings
from ..config.settings_manager import OVERRIDE_FIELDS, get_settings_manager
from ..engine.errors import (DomainError, ExpressionSyntaxError,
                             HarmonicToolError, ParameterError,
                             UnknownIdentityError)
from ..engine.eulersum import (alternating_euler_series, euler_alternating,
                               expr_eval, format_expression)
from ..engine.numkernel import agree_digits, make_context
from ..engine.series import sum_alternating_accel
from ..engine.specfun import (SpecialFunction, SpecialValueRequest,
                              evaluate_special)
from ..exporters import JsonReportExporter, TextReportExporter, format_report
from ..registry import (get_identity, list_identities, parse_rational, verify,
                        verify_all)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad command-line input detected after argparse."""
    pass


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    logging.captureWarnings(True)


def _digits_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    precision = get_settings().precision
    if value < precision.min_digits:
        raise argparse.ArgumentTypeError(f"digits must be >= {precision.min_digits}, got {value}")
    if value > precision.max_digits:
        raise argparse.ArgumentTypeError(f"digits must be <= {precision.max_digits}, got {value}")
    return value


def _positive_int_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParameterError as e:
        raise argparse.ArgumentTypeError(str(e))


def parse_bindings(pairs: Optional[List[str]]) -> Dict[str, Fraction]:
    """
    Parse repeated --param name=value options.

    Raises:
        ParameterError: Missing '=' or a value that is not an exact rational
    """
    bindings = {}
    for pair in pairs or []:
        name, sep, value = pair.partition('=')
        if not sep or not name.strip():
            raise ParameterError(f"parameter binding '{pair}' must look like name=value")
        bindings[name.strip()] = parse_rational(value)
    return bindings


def _schema_text(identity_id: str) -> str:
    try:
        record = get_identity(identity_id)
    except UnknownIdentityError:
        return ""
    if not record.params:
        return f"{record.id} takes no parameters"
    lines = [f"{record.id} parameters:"]
    for p in record.params:
        lines.append(f"  {p.name}: {p.domain_text()} (default {p.default})")
    return "\n".join(lines)


def _print_value(label: str, value, digits: int):
    print(f"  {label:<10}{mpmath.nstr(value, digits)}")


def cmd_verify(args) -> int:
    policy = VerificationPolicy(
        digits=args.digits,
        method=args.method,
        check_errors=args.check_errors or get_settings().verification.check_errors,
        workers=args.threads or get_settings().verification.workers,
    )
    reports = verify_all(policy, args.only)
    if not reports:
        raise UsageError(f"no identity matches '{args.only}'")

    print(format_report(reports, args.output))
    if args.output == OutputMode.TEXT.value:
        print(TextReportExporter().summary_line(reports))
    if args.json:
        JsonReportExporter().export(args.json, reports)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_eval(args) -> int:
    bindings = parse_bindings(args.param)
    policy = VerificationPolicy(digits=args.digits, method=args.method)
    report = verify(args.id, bindings, policy)
    if args.output == OutputMode.JSON.value:
        print(format_report([report], OutputMode.JSON))
    else:
        record = get_identity(args.id)
        print(f"{record.id}: {record.title}")
        if report.params:
            print(f"  params    {report.params_text()}")
        print(f"  lhs       {report.lhs}")
        print(f"  rhs       {report.rhs}")
        print(f"  matched   {report.matched_digits} digits")
        print(f"  method    {report.method}")
        print(f"  status    {report.status.value}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_special(args) -> int:
    try:
        function = SpecialFunction(args.fn)
    except ValueError:
        names = ", ".join(f.value for f in SpecialFunction)
        raise UsageError(f"unknown function '{args.fn}' (available: {names})")
    digits = args.digits or get_settings().precision.default_digits
    ctx = make_context(digits)
    request = SpecialValueRequest(function, args.arg, args.order)
    value = evaluate_special(request, ctx)
    with ctx.workdps():
        print(mpmath.nstr(value, digits))
    return EXIT_OK


def cmd_euler_sum(args) -> int:
    expression = euler_alternating(args.p, args.q)
    print(format_expression(expression))
    if not args.numeric:
        return EXIT_OK

    digits = args.digits or get_settings().precision.default_digits
    ctx = make_context(digits)
    closed = expr_eval(expression, ctx)
    summed = sum_alternating_accel(alternating_euler_series(args.p, args.q), ctx).value
    with ctx.workdps():
        matched = agree_digits(closed, summed, ctx)
        _print_value("closed", closed, digits)
        _print_value("summed", summed, digits)
    print(f"  matched   {matched} digits")
    return EXIT_OK if matched >= digits else EXIT_FAILED


def cmd_integrate(args) -> int:
    record = get_identity(args.id)
    sides = [side for side, plan in (('lhs', record.lhs), ('rhs', record.rhs))
             if plan.method == SumMethod.QUADRATURE]
    if not sides:
        raise UsageError(f"{record.id} has no integral side")
    args.param = args.param or []
    args.method = None
    return cmd_eval(args)


def cmd_list(args) -> int:
    records = list_identities()
    df = identities_to_dataframe(records)
    print(df.to_string(index=False))
    print(f"{len(records)} identities")
    return EXIT_OK


def cmd_settings(args) -> int:
    manager = get_settings_manager()
    if args.action == 'show':
        info = manager.get_settings_info()
        print(f"Settings file: {info['settings_file']}")
        print(f"Using defaults: {info['using_defaults']}")
        current = get_settings()
        for key, (section, attribute, _) in OVERRIDE_FIELDS.items():
            value = getattr(getattr(current, section), attribute)
            marker = " (override)" if key in info['overrides'] else ""
            print(f"  {key:<12}{value}{marker}")
        return EXIT_OK
    if args.action == 'reset':
        return EXIT_OK if manager.reset_to_defaults() else EXIT_FAILED

    overrides = {}
    for pair in args.values:
        key, sep, value = pair.partition('=')
        if not sep or key not in OVERRIDE_FIELDS:
            known = ", ".join(OVERRIDE_FIELDS)
            raise UsageError(f"settings set expects KEY=VALUE with KEY in: {known}")
        try:
            overrides[key] = int(value)
        except ValueError:
            raise UsageError(f"value for '{key}' must be an integer, got '{value}'")
    cleaned = manager.validate_overrides(overrides)
    if len(cleaned) != len(overrides):
        raise UsageError("rejected invalid settings values")
    return EXIT_OK if manager.save_overrides(cleaned) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog='harmonic-cli',
        description="Harmonic Series Identity Verification Tool",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Verify one identity to 25 digits
  harmonic-cli verify --only THM_S1 --digits 25

  # Evaluate both sides of a parameterized identity
  harmonic-cli eval --id THM_HARDY_ALT --param k=2 --param x=7/2

  # Closed form of an alternating Euler sum
  harmonic-cli euler-sum --p 1 --q 2
        """
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='Verbose logging')

    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    def add_digits(sub, help_text):
        sub.add_argument('--digits', type=_digits_arg, default=None, help=help_text)

    def add_output(sub):
        sub.add_argument('--output', choices=[m.value for m in OutputMode],
                         default=OutputMode.TEXT.value, help='Report format on stdout')

    # Verify command
    verify_parser = subparsers.add_parser('verify', help='Verify catalog identities')
    verify_parser.add_argument('--only', metavar='GLOB', help='Identity id filter, e.g. HARDY*')
    add_digits(verify_parser, 'Digits required to pass (default: per identity)')
    verify_parser.add_argument('--json', metavar='PATH', help='Also write a JSON report')
    verify_parser.add_argument('--method', choices=[m.value for m in SumMethod],
                               help='Force an LHS plan by method')
    verify_parser.add_argument('--check-errors', action='store_true',
                               help='Recompute with extra guard digits to test error estimates')
    verify_parser.add_argument('--threads', type=_positive_int_arg, help='Worker processes')
    add_output(verify_parser)

    # Eval command
    eval_parser = subparsers.add_parser('eval', help='Evaluate both sides of one identity')
    eval_parser.add_argument('--id', required=True, help='Identity id')
    eval_parser.add_argument('--param', action='append', metavar='NAME=VALUE',
                             help='Parameter binding (integer or a/b)')
    eval_parser.add_argument('--method', choices=[m.value for m in SumMethod],
                             help='Force an LHS plan by method')
    add_digits(eval_parser, 'Digits required to pass')
    add_output(eval_parser)

    # Special command
    special_parser = subparsers.add_parser('special', help='Evaluate a special function')
    special_parser.add_argument('--fn', required=True,
                                help=f"One of: {', '.join(f.value for f in SpecialFunction)}")
    special_parser.add_argument('--arg', type=_rational_arg, help='Argument (integer or a/b)')
    special_parser.add_argument('--order', type=int, help='Order (polylog, polygamma, ...)')
    add_digits(special_parser, 'Digits to print')

    # Euler sum command
    euler_parser = subparsers.add_parser('euler-sum', help='Closed form of an alternating Euler sum')
    euler_parser.add_argument('--p', type=_positive_int_arg, required=True, help='Harmonic order')
    euler_parser.add_argument('--q', type=_positive_int_arg, required=True, help='Power of n')
    euler_parser.add_argument('--numeric', action='store_true',
                              help='Compare against accelerated summation')
    add_digits(euler_parser, 'Digits for --numeric')

    # Integrate command
    integrate_parser = subparsers.add_parser('integrate', help='Evaluate an integral identity')
    integrate_parser.add_argument('--id', required=True, help='Identity id with an integral side')
    integrate_parser.add_argument('--param', action='append', metavar='NAME=VALUE',
                                  help='Parameter binding (integer or a/b)')
    add_digits(integrate_parser, 'Digits required to pass')
    add_output(integrate_parser)

    # List command
    subparsers.add_parser('list', help='List catalog identities')

    # Settings command
    settings_parser = subparsers.add_parser('settings', help='Show or change stored settings')
    settings_parser.add_argument('action', choices=['show', 'reset', 'set'])
    settings_parser.add_argument('values', nargs='*', metavar='KEY=VALUE',
                                 help=f"Overrides for 'set': {', '.join(OVERRIDE_FIELDS)}")

    return parser


COMMANDS = {
    'verify': cmd_verify,
    'eval': cmd_eval,
    'special': cmd_special,
    'euler-sum': cmd_euler_sum,
    'integrate': cmd_integrate,
    'list': cmd_list,
    'settings': cmd_settings,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and dispatch a subcommand.

    Returns:
        0 when everything passed, 1 on any failed or errored verification,
        2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    _configure_logging(args.verbose)
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    get_settings_manager().apply_to(get_settings())

    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParameterError, DomainError, ExpressionSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        schema = _schema_text(getattr(args, 'id', '') or '')
        if schema:
            print(schema, file=sys.stderr)
        return EXIT_USAGE
    except UnknownIdentityError as e:
        print(f"error: {e}", file=sys.stderr)
        print("run 'harmonic-cli list' for the available identities", file=sys.stderr)
        return EXIT_USAGE
    except HarmonicToolError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILED


def main():
    """Main entry point."""
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
