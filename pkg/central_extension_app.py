#!/usr/bin/env python3
"""
Central Extension Toolkit
Verify finite 2-groups, build central extensions from generalized cocycles
and integrate Lie algebra cocycles on charted Lie groups
"""
import sys
import os
import argparse
from typing import List, Optional

import numpy as np

# Load environment variables from .env file
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass  # dotenv is optional

# Add src directory to path
sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from algebra_core import abelian_invariant_factors, isomorphism_invariants
from config import Settings, get_settings
from errors import CentralExtensionError, InvalidInputError, RefusedConstruction
from group_cohomology import cohomology_group, cone_h2, les_exactness_check
from lie_groups import MATRIX_HOMOMORPHISMS, get_lie_group, get_matrix_homomorphism
from lie_numeric import (
    SmoothGeneralizedCocycle,
    chart_product_check,
    covering_group_check,
    derive_LF_table,
    exp_naturality_check,
    lie3_pipeline_heisenberg,
    numeric_provenance,
    richardson_check,
    winding_cocycle,
    winding_grid_check,
)
from reports import FAIL, INFO, PASS, REFUSED, Finding, Report, emit_report
from serialization import (
    abelian_from_json,
    action_from_json,
    cochain_from_json,
    cochain_to_json,
    crossed_module_from_json,
    generalized_cocycle_from_json,
    group_from_json,
    hom_from_json,
    int_field,
    load_json,
    load_object,
    omega_from_json,
    points_from_json,
    save_json,
    two_group_from_json,
    two_group_to_json,
)
from two_groups import (
    extension_from_cocycle,
    hidden_action_check,
    skeletal_2group_from_3cocycle,
    skeleton_and_band,
    strict_2group_from_crossed_module,
    verify_2group,
    verify_crossed_module,
    verify_extension_seq,
    verify_generalized_cocycle,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_REFUSED = 2

VERBS = ('cohomology', 'cone-h2', 'check-2group', 'build-extension', 'band', 'verify-cocycle', 'integrate',
         'defect', 'derive-lf', 'derive-bracket', 'covering', 'pipeline', 'exp-check')


def status(message: str):
    """Progress lines go to stderr so stdout carries only the report"""
    print(message, file=sys.stderr)


class CentralExtensionApp:
    """
    Main application class that dispatches verbs to the algebraic and numeric modules.
    """

    def __init__(self, settings: Optional[Settings] = None, samples: int = 20):
        self.settings = settings or get_settings()
        self.samples = samples
        self.rng = np.random.default_rng(self.settings.seed)

    # -- finite algebra ---------------------------------------------------

    def cohomology(self, path: str, degree: Optional[int] = None) -> Report:
        """H^n(G, A) from a file with "group", "coeff" and optionally "degree" and "action" """
        data = load_object(path)
        group = group_from_json(data.get('group'))
        coeff = abelian_from_json(data.get('coeff'))
        action = action_from_json(data['action'], group, coeff) if 'action' in data else None
        n = degree if degree is not None else int_field(data, 'degree', 2)
        status(f"🧮 Computing H^{n}({group}, {coeff})")
        result = cohomology_group(group, coeff, action, n, self.settings)
        findings = [Finding('cohomology.group', status=INFO, value={
            'invariant_factors': result.group_iso_class,
            'representatives': [cochain_to_json(c) for c in result.representative_cocycles],
        })]
        return Report.from_findings(findings, {'group_order': group.order, 'coefficients': str(coeff), 'degree': n})

    def cone_h2(self, path: str) -> Report:
        """Classes of generalized cocycles for τ: A → Z and exactness of the long exact sequence"""
        data = load_object(path)
        group = group_from_json(data.get('group'))
        tau = hom_from_json(data.get('tau', {}))
        status(f"🧮 Enumerating generalized cocycles on {group} for {tau.source} -> {tau.target}")
        classes = cone_h2(group, tau, self.settings)
        report = Report.from_findings([Finding('cone_h2.classes', status=INFO, value={
            'count': classes.count,
            'cocycle_pairs': classes.pair_count,
            'representatives': [{'F': cochain_to_json(F), 'theta': cochain_to_json(theta)}
                                for F, theta in classes.representatives],
        })], {'group_order': group.order, 'A': str(tau.source), 'Z': str(tau.target)})
        return report.extend(les_exactness_check(group, tau, self.settings))

    def check_2group(self, path: str) -> Report:
        """Verify a serialized 2-group, a crossed module or a skeletal 2-group given by Θ"""
        data = load_object(path)
        kind = data.get('kind', 'two_group')
        if kind == 'crossed_module':
            cm = crossed_module_from_json(data)
            report = verify_crossed_module(cm)
            if not report.ok:
                return report
            tg = strict_2group_from_crossed_module(cm)
        elif kind == 'skeletal':
            group = group_from_json(data.get('group'))
            coeff = abelian_from_json(data.get('coeff'))
            theta = cochain_from_json(data.get('theta', {}), group, coeff)
            tg = skeletal_2group_from_3cocycle(group, coeff, theta, check_cocycle=False)
        elif kind == 'two_group':
            tg = two_group_from_json(data)
        else:
            raise InvalidInputError(f"Unknown 2-group kind: {kind}")
        status(f"📋 Checking {tg.object_count} objects and {tg.morphism_count} morphisms")
        report = verify_2group(tg)
        if report.ok:
            report.extend(hidden_action_check(tg))
        return report

    def build_extension(self, path: str, export: Optional[str] = None) -> Report:
        gc = generalized_cocycle_from_json(load_object(path))
        status(f"🚀 Building the extension of {gc.base} by {gc.a} -> {gc.z}")
        seq = extension_from_cocycle(gc)
        report = verify_extension_seq(seq)
        report.provenance.update({'objects': seq.total.object_count, 'morphisms': seq.total.morphism_count})
        if export:
            save_json(two_group_to_json(seq.total), export)
            status(f"✅ Total 2-group written to {export}")
        return report

    def band(self, path: str) -> Report:
        """Skeleton Z/τ(A) and band of the extension built from a generalized cocycle file"""
        seq = extension_from_cocycle(generalized_cocycle_from_json(load_object(path)))
        result = skeleton_and_band(seq)
        report = result.report
        band_invariants = isomorphism_invariants(result.band)
        report.findings.append(Finding('band.invariants', status=INFO, value={
            'band': band_invariants,
            'skeleton': abelian_invariant_factors(result.skeleton_group),
            'skeleton_presentation': str(result.skel_z),
        }))
        return report

    def verify_cocycle(self, path: str) -> Report:
        return verify_generalized_cocycle(generalized_cocycle_from_json(load_object(path)))

    # -- Lie numerics -----------------------------------------------------

    def _cocycle(self, group_name: Optional[str], omega_path: str):
        group = get_lie_group(group_name)
        omega = omega_from_json(load_json(omega_path))
        return group, omega, SmoothGeneralizedCocycle.from_settings(group, omega, self.settings)

    def integrate(self, group_name: Optional[str], omega_path: str, pair_path: str) -> Report:
        """F_{ω,β}(g, h) for a pair given in chart coordinates, with a quadrature convergence check"""
        group, omega, F = self._cocycle(group_name, omega_path)
        g_coords, h_coords = points_from_json(load_object(pair_path))
        g, h = group.point(g_coords), group.point(h_coords)
        status(f"🧮 Integrating ω over β_(g,h) on {group.name}")
        convergence = richardson_check(group, omega, g, h, self.settings)
        report = Report.from_findings([Finding('integrate.value', status=INFO, value=F(g, h))],
                                      convergence.provenance)
        return report.extend(convergence)

    def defect(self, group_name: Optional[str], omega_path: str) -> Report:
        """d_gp F_{ω,β} on random triples in the ball of chart radius 0.5"""
        group, omega, F = self._cocycle(group_name, omega_path)
        status(f"🧮 Sampling {self.samples} triples on {group.name}")
        worst = 0.0
        for _ in range(self.samples):
            g, h, k = (group.point(group.random_coordinates(self.rng, 0.5)) for _ in range(3))
            gh, hk = group.mult(g, h), group.mult(h, k)
            value = F(h, k) - F(gh, k) + F(g, hk) - F(g, h)
            worst = max(worst, float(np.max(np.abs(value))))
        lie_defect = omega.cocycle_defect(group.algebra(), rng=self.rng)
        tolerance = self.settings.tolerance
        findings = [
            Finding('omega.lie_cocycle', status=PASS if lie_defect <= 1e-9 else FAIL, value=lie_defect,
                    tolerance=1e-9),
            Finding('cocycle.defect', status=PASS if worst <= tolerance else FAIL, value=worst, tolerance=tolerance),
        ]
        provenance = numeric_provenance(self.settings, tolerance_estimate=worst, samples=self.samples,
                                        group=group.name)
        return Report.from_findings(findings, provenance)

    def derive_lf(self, group_name: Optional[str], omega_path: str) -> Report:
        """L(F_{ω,β}) on basis pairs against ω, at fd_step and fd_step/2"""
        group, omega, F = self._cocycle(group_name, omega_path)
        step = self.settings.fd_step
        status(f"🧮 Differentiating F_(ω,β) on {group.name} with fd_step {step:g}")
        deviation = float(np.max(np.abs(derive_LF_table(F, step).structure - omega.structure)))
        deviation_half = float(np.max(np.abs(derive_LF_table(F, step / 2.0).structure - omega.structure)))
        tolerance = 1e-4
        findings = [
            Finding('derive_lf.deviation', status=PASS if deviation <= tolerance else FAIL, value=deviation,
                    tolerance=tolerance),
            Finding('derive_lf.halved_step', status=INFO, value={
                'deviation': deviation_half, 'ratio': deviation / deviation_half if deviation_half > 0 else None}),
        ]
        provenance = numeric_provenance(self.settings, tolerance_estimate=max(deviation, deviation_half),
                                        group=group.name)
        return Report.from_findings(findings, provenance)

    def derive_bracket(self, group_name: Optional[str]) -> Report:
        group = get_lie_group(group_name)
        status(f"🧮 Deriving the bracket of {group.name} from its chart product")
        return chart_product_check(group, self.samples, self.settings.seed, self.settings)

    def covering(self) -> Report:
        """ℤ ×_Θ S¹ ≅ ℝ on random samples, plus the exact grid check of Θ_α"""
        status(f"🧮 Checking the covering group on {self.samples} samples")
        report = covering_group_check(self.samples, self.settings.seed)
        example = winding_cocycle(np.exp(1.5j * np.pi), np.exp(1j * np.pi))
        report.extend(Report.from_findings([Finding('covering.example', status=PASS if example == 1 else FAIL,
                                                    witness=('3π/2', 'π'), value=example)]))
        report.extend(winding_grid_check(32))
        report.provenance.update(numeric_provenance(self.settings, **report.provenance))
        return report

    def pipeline(self, name: str, scale: float = 1.0) -> Report:
        if name != 'heisenberg':
            raise InvalidInputError(f"Unknown pipeline: {name}")
        status("🚀 Running the Heisenberg integration pipeline")
        return lie3_pipeline_heisenberg(self.settings, scale)

    def exp_check(self, names: Optional[List[str]] = None) -> Report:
        report = Report.from_findings([])
        worst = 0.0
        for name in names or MATRIX_HOMOMORPHISMS:
            status(f"🧮 exp naturality for {name}")
            check = exp_naturality_check(get_matrix_homomorphism(name), self.samples, self.settings.seed,
                                         settings=self.settings)
            worst = max(worst, check.provenance['tolerance_estimate'])
            report.extend(check, prefix=f'{name}.')
        report.provenance.update(numeric_provenance(self.settings, samples=self.samples, seed=self.settings.seed,
                                                    tolerance_estimate=worst))
        return report

    def run(self, args: argparse.Namespace) -> Report:
        """Dispatch one verb"""
        verb = args.verb

        def need(value, flag):
            if not value:
                raise InvalidInputError(f"{verb} requires {flag}")
            return value

        if verb == 'cohomology':
            return self.cohomology(need(args.input, '--input'), args.degree)
        elif verb == 'cone-h2':
            return self.cone_h2(need(args.tau or args.input, '--tau'))
        elif verb == 'check-2group':
            return self.check_2group(need(args.input, '--input'))
        elif verb == 'build-extension':
            return self.build_extension(need(args.cocycle or args.input, '--cocycle'), args.export)
        elif verb == 'band':
            return self.band(need(args.extension or args.input, '--extension'))
        elif verb == 'verify-cocycle':
            return self.verify_cocycle(need(args.cocycle or args.input, '--cocycle'))
        elif verb == 'integrate':
            return self.integrate(args.group, need(args.omega, '--omega'), need(args.pair, '--pair'))
        elif verb == 'defect':
            return self.defect(args.group, need(args.omega, '--omega'))
        elif verb == 'derive-lf':
            return self.derive_lf(args.group, need(args.omega, '--omega'))
        elif verb == 'derive-bracket':
            return self.derive_bracket(args.group)
        elif verb == 'covering':
            return self.covering()
        elif verb == 'pipeline':
            return self.pipeline(args.target or 'heisenberg', args.scale)
        elif verb == 'exp-check':
            return self.exp_check(args.hom)
        raise InvalidInputError(f"Unknown verb: {verb}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Central Extension Toolkit - verify 2-groups, build central extensions, integrate Lie cocycles')
    parser.add_argument('verb', choices=VERBS, help='Operation to run')
    parser.add_argument('target', nargs='?', help='Pipeline name (pipeline verb only, default: heisenberg)')
    parser.add_argument('--input', help='Input JSON file')
    parser.add_argument('--cocycle', help='Generalized cocycle JSON file')
    parser.add_argument('--extension', help='Generalized cocycle JSON file whose extension is analysed')
    parser.add_argument('--tau', help='JSON file with a group and τ: A -> Z')
    parser.add_argument('--omega', help='Lie algebra cocycle JSON file (m×n×n structure constants)')
    parser.add_argument('--pair', help='JSON file with chart coordinates "g" and "h"')
    parser.add_argument('--group', help='Builtin Lie group (or set CEXT_LIE_GROUP, default: su2)')
    parser.add_argument('--hom', action='append', choices=MATRIX_HOMOMORPHISMS,
                        help='Matrix homomorphism for exp-check (repeatable, default: all)')
    parser.add_argument('--degree', type=int, help='Cohomology degree')
    parser.add_argument('--scale', type=float, default=1.0, help='Scale of the symplectic cocycle (pipeline)')
    parser.add_argument('--output', help='Write the report to this file instead of stdout')
    parser.add_argument('--export', help='Write the constructed total 2-group as JSON (build-extension)')
    parser.add_argument('--format', choices=['json', 'text'], default='json', help='Report format (default: json)')
    parser.add_argument('--quad-order', type=int, help='Gauss-Legendre order (default: 10)')
    parser.add_argument('--fd-step', type=float, help='Finite-difference step for derived brackets (default: 1e-3)')
    parser.add_argument('--tolerance', type=float, help='Pass/fail tolerance for numeric checks (default: 1e-6)')
    parser.add_argument('--seed', type=int, help='Seed for sampled checks (default: 0)')
    parser.add_argument('--samples', type=int, default=20, help='Number of random samples (default: 20)')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point"""
    args = build_parser().parse_args(argv)

    try:
        settings = get_settings().with_overrides(quad_order=args.quad_order, fd_step=args.fd_step,
                                                 tolerance=args.tolerance, seed=args.seed)
        report = CentralExtensionApp(settings, samples=args.samples).run(args)
    except RefusedConstruction as e:
        status(f"❌ Refused: {e}")
        report = Report.refused(str(e), witness=e.witness, check=e.axiom or 'input')
    except CentralExtensionError as e:
        status(f"❌ {e}")
        report = Report.refused(str(e))

    output = emit_report(report, args.format)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as f:
            f.write(output + '\n')
        status(f"📋 Report written to {args.output}")
    else:
        print(output)

    if report.status == PASS:
        status("✅ All checks passed")
        return EXIT_PASS
    if report.status == REFUSED:
        return EXIT_REFUSED
    failed = report.failed_checks() if report.status == FAIL else []
    status(f"⚠️  Failed checks: {', '.join(failed)}")
    return EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main())
