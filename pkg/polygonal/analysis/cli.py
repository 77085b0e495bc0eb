# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from argparse import ArgumentParser
from os.path import abspath

import numpy

from polygonal import app
from polygonal.__version__ import __version__
from ..common.config import EPS_TRIANGLE, EPS_WEIGHT, EPS_COORD, EPS_EIG_SCALE, TOL_P, P_MAX, RANK_RTOL, \
    EPS_CLASSIFY, WORKER_COUNT, DEFAULT_PATH
from ..common.errors import InputError, InvalidMetric, InvalidFile, NumericFailure, ParameterOutOfRange, \
    ExponentMismatch
from ..common.logs import logger
from ..common import Storage, BackgroundRunner
from ..common.models import AnalysisReport, ErrorReport, LpPointSet, FiniteMetricSpace
from ..common.schemas import AnalysisReportSchema, ErrorReportSchema, RoundnessReportSchema, EqualityWitnessSchema, \
    GapValueSchema, RefinementSchema, VDReportSchema, VDKernelSchema, Gamma2IdentitySchema, \
    PolygonalClassificationSchema, AffineReportSchema, ElsnerReportSchema, CertificateSchema, \
    ObstructionReportSchema, SimplexSchema, PropertyEReportSchema, SchoenbergReportSchema
from ..common.serialize import serialize
from .constructions import KINDS, build_fixtures, write_fixtures
from .hilbert import gamma2_identity, classify_2_polygonal, affine_dependence, balanced_simplex_from_dependency, \
    strict_2_negtype
from .lp import lp_distance_matrix, negtype_exponent, gamma_p_lp, is_virtually_degenerate, is_balanced, vd_kernel, \
    strict_p_negtype_lp, elsner_identity_check, property_e_report, INFVDS_VARIANTS
from .metric import validated
from .negtype import generalized_roundness, equality_witnesses, has_strict_negative_type, embedding_obstruction, \
    schoenberg_check
from .simplex import gamma_p, complete_refine, refine_by_procedures, equivalent, is_degenerate

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


def dump(schema, item):
    return schema.dump(item).data


def require(value, name):
    if value is None:
        raise ParameterOutOfRange("--%s is required for this action" % name.replace("_", "-"))
    return value


def read_metric_space(storage, path, eps_triangle):
    space = storage.read_space(path)
    if isinstance(space, LpPointSet):
        return lp_distance_matrix(space)
    return validated(space, eps_triangle)


def read_simplex(storage, path, eps_triangle):
    simplex = storage.read_simplex(path)
    if isinstance(simplex.universe, FiniteMetricSpace):
        validated(simplex.universe, eps_triangle)
    return simplex


def read_l2_simplex(storage, path, eps_triangle):
    simplex = read_simplex(storage, path, eps_triangle)
    if not isinstance(simplex.universe, LpPointSet) or simplex.universe.p != 2:
        raise ExponentMismatch("this action needs a simplex over an l_2 point set")
    return simplex


def roundness(storage, input_file, eps_triangle, p_max, tol_p, eps_eig):
    space = read_metric_space(storage, input_file, eps_triangle)
    return dump(RoundnessReportSchema(), generalized_roundness(space, p_max, tol_p, eps_eig)), True


def witness(storage, input_file, eps_triangle, p, eps_eig, expect_witness):
    space = read_metric_space(storage, input_file, eps_triangle)
    witnesses = equality_witnesses(space, require(p, "p"), eps_eig)
    results = dict(p=p,
                   labels=space.labels,
                   strict=not witnesses,
                   witnesses=dump(EqualityWitnessSchema(many=True), witnesses))
    return results, bool(witnesses) or not expect_witness


def gap(storage, input_file, eps_triangle, eps_weight, p):
    simplex = read_simplex(storage, input_file, eps_triangle)
    results = dict(degenerate=is_degenerate(simplex, eps_weight),
                   gap=dump(GapValueSchema(), gamma_p(simplex, require(p, "p"))))
    if isinstance(simplex.universe, LpPointSet):
        results["lp_gap"] = dump(GapValueSchema(), gamma_p_lp(simplex))
    return results, True


def refine(storage, input_file, eps_triangle, eps_weight):
    simplex = read_simplex(storage, input_file, eps_triangle)
    refinement = complete_refine(simplex, eps_weight)
    oracle = refine_by_procedures(simplex, eps_weight)

    agree = refinement.degenerate == oracle.degenerate
    if agree and not refinement.degenerate:
        agree = equivalent(refinement.simplex, oracle.simplex, eps_weight)
    if not agree:
        logger.warning("Closed-form refinement and procedure chain disagree")

    results = dump(RefinementSchema(), refinement)
    results["procedures_agree"] = agree
    return results, True


def vd_check(storage, input_file, eps_triangle, eps_weight, eps_coord, exact, background_runner):
    simplex = read_simplex(storage, input_file, eps_triangle)
    report = is_virtually_degenerate(simplex, eps_weight, eps_coord, exact, runner=background_runner)

    results = dump(VDReportSchema(), report)
    results["balanced"] = bool(is_balanced(simplex, eps_weight))
    results["gap"] = dump(GapValueSchema(), gamma_p_lp(simplex))
    # Below p = 2 virtual degeneracy is equivalent to a zero gap, above it is only sufficient
    results["classifies_gap"] = simplex.universe.p < 2
    return results, True


def vd_solve(storage, input_file, eps_coord, exact):
    points = storage.read_points(input_file)
    kernel = vd_kernel(points, eps_coord, exact)
    results = dump(VDKernelSchema(), kernel)
    if points.p < 2:
        results["strict"] = kernel.dimension == 0
    return results, True


def hilbert(storage, input_file, eps_triangle, eps_classify):
    simplex = read_l2_simplex(storage, input_file, eps_triangle)
    return dict(identity=dump(Gamma2IdentitySchema(), gamma2_identity(simplex)),
                classification=dump(PolygonalClassificationSchema(), classify_2_polygonal(simplex, eps_classify))), True


def affine(storage, input_file, rank_rtol, eps_weight):
    points = storage.read_points(input_file)
    report = affine_dependence(points, rank_rtol)
    results = dump(AffineReportSchema(), report)
    if report.dependent:
        simplex = balanced_simplex_from_dependency(points, report.dependency, eps_weight)
        results["balanced_simplex"] = dump(SimplexSchema(exclude=("universe",)), simplex)
    return results, True


def elsner(storage, input_file, p, eps_weight, eps_coord):
    families = storage.read_families(input_file)
    exponent = families.p if p is None else p
    return dump(ElsnerReportSchema(), elsner_identity_check(families.xs, families.ys, exponent,
                                                            eps_weight, eps_coord)), True


def strictness(storage, input_file, eps_coord, exact, eps_eig, rank_rtol):
    points = storage.read_points(input_file)
    exponent = negtype_exponent(points.p)
    certificate = has_strict_negative_type(lp_distance_matrix(points), exponent, eps_eig)

    results = dict(p=points.p, eigenvalue=dump(CertificateSchema(), certificate))
    if points.p < 2:
        strict = strict_p_negtype_lp(points, eps_coord, exact, eps_eig)
        results["criterion"] = "virtual_degeneracy"
    elif points.p == 2:
        strict = strict_2_negtype(points, rank_rtol, eps_eig)
        results["criterion"] = "affine_independence"
    else:
        strict = certificate.holds
        results["criterion"] = "eigenvalue"
    results["strict"] = strict
    return results, True


def property_e(storage, input_file, eps_coord):
    generators = storage.read_points(input_file)
    return dump(PropertyEReportSchema(), property_e_report(generators.coords, eps_coord)), True


def schoenberg(storage, input_file, eps_triangle, eps_eig):
    space = read_metric_space(storage, input_file, eps_triangle)
    return dump(SchoenbergReportSchema(), schoenberg_check(space, eps_eig)), True


def obstruction(storage, input_file, host_file, eps_triangle, p, q, eps_eig):
    source = read_metric_space(storage, input_file, eps_triangle)
    host = read_metric_space(storage, require(host_file, "host_file"), eps_triangle)
    p = require(p, "p")

    witnesses = equality_witnesses(host, p, eps_eig)
    if not witnesses:
        logger.info("Host has strict %g-negative type, nothing to obstruct", p)
        return dict(p=p, witnesses=[]), False

    report = embedding_obstruction(source, witnesses[0], p if q is None else q, eps_eig)
    return dump(ObstructionReportSchema(), report), report.verdict


def construct(storage, kind, prefix, u, v, p, count, dims, variant, n, seed):
    fixtures = build_fixtures(kind, u=u, v=v, p=p, count=count, dims=dims, variant=variant, n=n, seed=seed)
    return dict(kind=kind, files=write_fixtures(storage, fixtures, prefix or kind)), True


operations = {"roundness": roundness,
              "witness": witness,
              "gap": gap,
              "refine": refine,
              "vd-check": vd_check,
              "vd-solve": vd_solve,
              "hilbert": hilbert,
              "affine": affine,
              "elsner": elsner,
              "strictness": strictness,
              "property-e": property_e,
              "schoenberg": schoenberg,
              "obstruction": obstruction,
              "construct": construct}

TOLERANCES = ("eps_triangle", "eps_weight", "eps_coord", "eps_eig", "tol_p", "p_max", "rank_rtol", "eps_classify")

parser = ArgumentParser(prog="python -m polygonal.analysis",
                        description="Negative type and polygonal equality analysis")
parser.add_argument("action", choices=operations.keys())
parser.add_argument("-i", "--input-file", dest="input_file", help="Metric, point set, simplex or family file")
parser.add_argument("--host-file", dest="host_file", help="Space carrying the polygonal equality (obstruction)")
parser.add_argument("--p", dest="p", type=float, help="Exponent")
parser.add_argument("--q", dest="q", type=float, help="Strictness exponent of the source (obstruction), p by default")
parser.add_argument("--expect-witness", dest="expect_witness", action="store_true",
                    help="Exit with status 1 when no polygonal equality is found")
parser.add_argument("--exact", dest="exact", action="store_true",
                    help="Compare coordinate values exactly instead of clustering within --eps-coord")

parser.add_argument("--eps-triangle", dest="eps_triangle", type=float, default=EPS_TRIANGLE)
parser.add_argument("--eps-weight", dest="eps_weight", type=float, default=EPS_WEIGHT)
parser.add_argument("--eps-coord", dest="eps_coord", type=float, default=EPS_COORD)
parser.add_argument("--eps-eig", dest="eps_eig", type=float,
                    help="Absolute eigenvalue tolerance, %g * max(1, max |lambda|) by default" % EPS_EIG_SCALE)
parser.add_argument("--tol-p", dest="tol_p", type=float, default=TOL_P)
parser.add_argument("--p-max", dest="p_max", type=float, default=P_MAX)
parser.add_argument("--rank-rtol", dest="rank_rtol", type=float, default=RANK_RTOL)
parser.add_argument("--eps-classify", dest="eps_classify", type=float, default=EPS_CLASSIFY)

parser.add_argument("--kind", dest="kind", choices=KINDS.keys(), default="parallelogram")
parser.add_argument("--prefix", dest="prefix", help="Fixture file prefix, the kind by default")
parser.add_argument("-o", "--output-dir", dest="output_dir", default=DEFAULT_PATH)
parser.add_argument("--u", dest="u", type=float, nargs="+")
parser.add_argument("--v", dest="v", type=float, nargs="+")
parser.add_argument("--count", dest="count", type=int)
parser.add_argument("--dims", dest="dims", type=int)
parser.add_argument("--variant", dest="variant", choices=INFVDS_VARIANTS)
parser.add_argument("--n", dest="n", type=int, help="Number of points (cycle, ultrametric)")
parser.add_argument("--seed", dest="seed", type=int, help="Random seed (ultrametric)")
parser.add_argument("--workers", dest="workers", type=int, default=WORKER_COUNT, help="0 runs everything inline")


def _tolerances(args):
    tolerances = {name: getattr(args, name) for name in TOLERANCES}
    if args.eps_eig is None:
        tolerances["eps_eig_scale"] = EPS_EIG_SCALE
    return tolerances


def _inputs(args):
    return {name: value for name, value in vars(args).items()
            if name not in TOLERANCES and name != "workers" and value is not None}


def _emit(schema, report):
    data, _ = serialize(schema, report)
    print(data)


def _fail(args, e, code, violations=None, details=None):
    logger.error("%s failed: %s", args.action, e)
    _emit(ErrorReportSchema(), ErrorReport(command=args.action, error=e.__class__.__name__, message=str(e),
                                           version=__version__, violations=violations, details=details))
    return code


def main(argv=None):
    args = parser.parse_args(argv)
    if args.input_file is not None:
        args.input_file = abspath(args.input_file)
    if args.host_file is not None:
        args.host_file = abspath(args.host_file)

    local = app.sub(storage=Storage,
                    background_runner=BackgroundRunner,
                    base_path=args.output_dir,
                    size=args.workers or None,
                    input_file=args.input_file,
                    host_file=args.host_file,
                    p=args.p,
                    q=args.q,
                    expect_witness=args.expect_witness,
                    exact=args.exact,
                    eps_triangle=args.eps_triangle,
                    eps_weight=args.eps_weight,
                    eps_coord=args.eps_coord,
                    eps_eig=args.eps_eig,
                    tol_p=args.tol_p,
                    p_max=args.p_max,
                    rank_rtol=args.rank_rtol,
                    eps_classify=args.eps_classify,
                    kind=args.kind,
                    prefix=args.prefix,
                    u=args.u,
                    v=args.v,
                    count=args.count,
                    dims=args.dims,
                    variant=args.variant,
                    n=args.n,
                    seed=args.seed)

    try:
        logger.info("Running %s", args.action)
        results, verdict = local.call(operations[args.action])
    except InvalidMetric as e:
        return _fail(args, e, EXIT_INPUT, violations=e.violations)
    except InvalidFile as e:
        return _fail(args, e, EXIT_INPUT, details=e.errors)
    except (InputError, FileNotFoundError) as e:
        return _fail(args, e, EXIT_INPUT)
    except (NumericFailure, numpy.linalg.LinAlgError) as e:
        return _fail(args, e, EXIT_NUMERIC)
    except Exception as e:
        # Unmapped errors come from the numerical stack, the report still goes out
        logger.debug("Unexpected failure in %s", args.action, exc_info=True)
        return _fail(args, e, EXIT_NUMERIC)
    finally:
        local.close()

    _emit(AnalysisReportSchema(), AnalysisReport(command=args.action, inputs=_inputs(args), results=results,
                                                 tolerances=_tolerances(args), version=__version__))
    return EXIT_OK if verdict else EXIT_NEGATIVE
