"""
Verification Runner Module

Evaluates identity sides and compares them digit by digit.
"""
import logging
import time
from fnmatch import fnmatchcase
from multiprocessing import Pool
from typing import Dict, List, Optional, Tuple

import mpmath
from mpmath import mpf

from ..config.models import (Evaluation, EvaluationPlan, IdentityRecord, Params,
                             ReportStatus, VerificationPolicy,
                             VerificationReport)
from ..engine.errors import (HarmonicToolError, IdentityEvaluationError,
                             ParameterError, PrecisionLossError)
from ..engine.numkernel import (PrecisionContext, agree_digits,
                                check_error_estimate, dual_evaluate,
                                make_context)
from .catalog import all_records, bind_params, get_identity, sweep_bindings

logger = logging.getLogger(__name__)

SIDES = ('lhs', 'rhs')

# Extra significant digits printed beyond the threshold
PRINT_EXTRA_DIGITS = 5


def list_identities() -> List[IdentityRecord]:
    """All catalog records, ordered by id."""
    return all_records()


def _lhs_plan(record: IdentityRecord, method: Optional[str]) -> EvaluationPlan:
    plans = (record.lhs,) + tuple(record.lhs_alternatives)
    if method is None:
        return record.lhs
    for plan in plans:
        if plan.method.value == method:
            return plan
    available = ", ".join(p.method.value for p in plans)
    raise ParameterError(f"{record.id}: no LHS plan with method '{method}' (available: {available})")


def _run_plan(record: IdentityRecord, side: str, plan: EvaluationPlan,
              params: Params, ctx: PrecisionContext) -> Evaluation:
    try:
        return plan.evaluate(params, ctx)
    except HarmonicToolError as e:
        if isinstance(e, IdentityEvaluationError):
            raise
        raise IdentityEvaluationError(record.id, side, e) from e
    except (ArithmeticError, ValueError, ZeroDivisionError) as e:
        raise IdentityEvaluationError(record.id, side, e) from e


def evaluate_side(identity_id: str, side: str, params: Optional[Dict[str, object]],
                  ctx: PrecisionContext) -> mpf:
    """
    Evaluate one side of an identity.

    Args:
        identity_id: Catalog id
        side: 'lhs' or 'rhs'
        params: Parameter bindings; missing names take their defaults
        ctx: Precision context

    Returns:
        Value of the requested side at the working precision of ctx

    Raises:
        UnknownIdentityError: Unknown id
        ParameterError: Bad side or parameters
        IdentityEvaluationError: The engine failed; carries id and side
    """
    record = get_identity(identity_id)
    if side not in SIDES:
        raise ParameterError(f"side must be 'lhs' or 'rhs', got '{side}'")
    bound = bind_params(record, params)
    plan = record.lhs if side == 'lhs' else record.rhs
    return _run_plan(record, side, plan, bound, ctx).value


def _check_honest(record: IdentityRecord, side: str, plan: EvaluationPlan, params: Params,
                  evaluation: Evaluation, ctx: PrecisionContext) -> None:
    try:
        recomputed, _ = dual_evaluate(
            lambda c: _run_plan(record, side, plan, params, c).value, ctx, evaluation.value)
    except PrecisionLossError as e:
        raise IdentityEvaluationError(record.id, side, e) from e
    check_error_estimate(f"{record.id} ({side})", evaluation.value, evaluation.est_error,
                         recomputed, ctx)


def _params_text(params: Params) -> Dict[str, str]:
    return {name: str(value) for name, value in params.items()}


def verify(identity_id: str, params: Optional[Dict[str, object]] = None,
           policy: Optional[VerificationPolicy] = None) -> VerificationReport:
    """
    Evaluate both sides of an identity and compare them.

    Every left-hand plan named by the policy and every right-hand plan of
    the record is evaluated; the reported match is the weakest pairwise
    agreement. Evaluation failures become status=error.

    Args:
        identity_id: Catalog id
        params: Parameter bindings
        policy: Digits, LHS method override, error check

    Returns:
        VerificationReport

    Raises:
        UnknownIdentityError: Unknown id
        ParameterError: Parameters outside the schema
    """
    policy = policy or VerificationPolicy()
    record = get_identity(identity_id)
    bound = bind_params(record, params)
    threshold = policy.digits or record.threshold()
    ctx = make_context(threshold)
    print_digits = threshold + PRINT_EXTRA_DIGITS

    start = time.perf_counter()
    lhs_text: Optional[str] = None
    rhs_text: Optional[str] = None
    method = ""
    matched = 0
    try:
        lhs_plan = _lhs_plan(record, policy.method)
        rhs_plans = (record.rhs,) + tuple(record.rhs_alternatives)
        method = f"{lhs_plan.method.value}/{record.rhs.method.value}"

        lhs = _run_plan(record, 'lhs', lhs_plan, bound, ctx)
        rhs_values = [_run_plan(record, 'rhs', plan, bound, ctx) for plan in rhs_plans]
        lhs_text = mpmath.nstr(lhs.value, print_digits)
        rhs_text = mpmath.nstr(rhs_values[0].value, print_digits)

        values = [lhs.value] + [r.value for r in rhs_values]
        matched = min(agree_digits(values[0], v, ctx) for v in values[1:])
        if len(values) > 2:
            matched = min(matched, min(agree_digits(values[1], v, ctx) for v in values[2:]))

        if policy.check_errors:
            _check_honest(record, 'lhs', lhs_plan, bound, lhs, ctx)
            for plan, evaluation in zip(rhs_plans, rhs_values):
                _check_honest(record, 'rhs', plan, bound, evaluation, ctx)

        status = ReportStatus.PASS if matched >= threshold else ReportStatus.FAIL
    except (HarmonicToolError, ArithmeticError, ValueError) as e:
        logger.error(f"{record.id} {_params_text(bound)}: {e}")
        status = ReportStatus.ERROR
    except Exception:
        logger.exception(f"{record.id} {_params_text(bound)}: unexpected failure")
        status = ReportStatus.ERROR

    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    report = VerificationReport(
        id=record.id,
        params=_params_text(bound),
        lhs=lhs_text,
        rhs=rhs_text,
        matched_digits=matched,
        method=method,
        elapsed_ms=elapsed_ms,
        status=status,
    )
    logger.info(f"{report.id} [{report.params_text()}] {status.value}: "
                f"{matched} digits ({method}, {elapsed_ms} ms)")
    return report


def select_records(selection: Optional[str] = None) -> List[IdentityRecord]:
    """Records whose id matches the glob (all records when None)."""
    records = all_records()
    if not selection:
        return records
    return [r for r in records if fnmatchcase(r.id, selection)]


def verification_jobs(selection: Optional[str] = None) -> List[Tuple[str, Params]]:
    """(id, params) pairs: defaults plus sweeps, in id order."""
    jobs = []
    for record in select_records(selection):
        for bound in sweep_bindings(record):
            jobs.append((record.id, bound))
    return jobs


def _verify_job(job: Tuple[str, Params, VerificationPolicy]) -> VerificationReport:
    identity_id, params, policy = job
    return verify(identity_id, params, policy)


def verify_all(policy: Optional[VerificationPolicy] = None,
               selection: Optional[str] = None) -> List[VerificationReport]:
    """
    Verify every selected record at its defaults and sweep bindings.

    Reports come back in id order followed by sweep order whatever the
    number of workers. A failing record never stops the run.

    Args:
        policy: Verification policy (workers > 1 runs a process pool)
        selection: Glob on identity ids, e.g. 'HARDY*'

    Returns:
        List of VerificationReport
    """
    policy = policy or VerificationPolicy()
    jobs = [(identity_id, params, policy) for identity_id, params in verification_jobs(selection)]
    logger.info(f"Verifying {len(jobs)} bindings with {policy.workers} worker(s)")

    if policy.workers > 1 and len(jobs) > 1:
        with Pool(processes=policy.workers) as pool:
            reports = pool.map(_verify_job, jobs, chunksize=1)
    else:
        reports = [_verify_job(job) for job in jobs]

    failed = sum(1 for r in reports if not r.passed)
    logger.info(f"Verification finished: {len(reports) - failed} passed, {failed} not passed")
    return reports
