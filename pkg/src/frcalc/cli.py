"""Command-line entry point: ``frcalc <module> <verb> [flags]``.

Every verb prints a JSON report {verb, pass, residuals, artifacts,
elapsed_ms} on stdout and exits 0 on pass, 1 on mathematical failure,
2 on usage or format errors.  All randomness is controlled by --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import abgroup, catverify, frames, fredholm, generators, grassmannian, homspace
from .config import load_settings
from .serialize import (
    FormatError,
    dump_json,
    frame_from_json,
    frame_to_json,
    fredholm_from_json,
    fredholm_to_json,
    grouphom_from_json,
    group_from_json,
    group_to_json,
    hom_from_json,
    hom_to_json,
    load_json,
    matrix_from_json,
    matrix_to_json,
    subalgebra_from_json,
    subalgebra_to_json,
)
from .suite import run_suite


def _write(obj, path, artifacts):
    if path:
        dump_json(obj, path)
        artifacts.append(path)


def _load_frame(path):
    return frame_from_json(load_json(path))


def _load_hom(path):
    return hom_from_json(load_json(path))


def _load_alg(path):
    return subalgebra_from_json(load_json(path))


def _load_matrix(path):
    return matrix_from_json(load_json(path))


# Each handler returns (pass, residuals, result, out_payloads) where
# out_payloads maps --flag-provided paths to JSON-serializable objects.


def _cmd_frame_make_units(a, s):
    fr = frames.matrix_unit_frame(a.d, a.cofactor)
    return True, {}, None, [(a.out, frame_to_json(fr))]


def _cmd_frame_verify(a, s):
    report = frames.verify_frame(_load_frame(a.infile), s.tol)
    residuals = {"axiom_i": report.axiom_i_maxerr,
                 "axiom_ii": report.axiom_ii_maxerr,
                 "axiom_iii": report.axiom_iii_maxerr}
    return report.pass_, residuals, None, []


def _cmd_frame_pi1(a, s):
    fr = frames.pi1(_load_frame(a.infile), a.split)
    return True, {}, None, [(a.out, frame_to_json(fr))]


def _cmd_frame_pi2(a, s):
    fr = frames.pi2(_load_frame(a.infile), a.split)
    return True, {}, None, [(a.out, frame_to_json(fr))]


def _cmd_frame_dot(a, s):
    left, right = _load_frame(a.left), _load_frame(a.right)
    residual = frames.commutation_residual(left, right)
    fr = frames.dot(left, right, s.tol)
    return True, {"commutation": residual}, None, [(a.out, frame_to_json(fr))]


def _cmd_frame_tensor(a, s):
    fr = frames.tensor_frame(_load_frame(a.left), _load_frame(a.right))
    return True, {}, None, [(a.out, frame_to_json(fr))]


def _cmd_frame_conj(a, s):
    fr = frames.conjugate_frame(_load_matrix(a.unitary), _load_frame(a.infile), s.tol)
    return True, {}, None, [(a.out, frame_to_json(fr))]


def _cmd_frame_random(a, s):
    fr = frames.random_frame(a.d, a.ambient, a.seed if a.seed is not None else s.seed)
    return True, {}, None, [(a.out, frame_to_json(fr))]


def _cmd_hom_ev(a, s):
    result = homspace.ev(_load_hom(a.hom), _load_matrix(a.matrix))
    return True, {}, None, [(a.out, matrix_to_json(result))]


def _cmd_hom_iota(a, s):
    h = homspace.iota(_load_hom(a.hom), a.l)
    return True, {}, None, [(a.out, hom_to_json(h))]


def _cmd_hom_compose(a, s):
    h = homspace.compose_phi(_load_hom(a.outer), _load_hom(a.inner))
    return True, {}, None, [(a.out, hom_to_json(h))]


def _cmd_hom_tensor(a, s):
    h = homspace.tensor_hom(_load_hom(a.left), _load_hom(a.right))
    return True, {}, None, [(a.out, hom_to_json(h))]


def _cmd_hom_intertwiner(a, s):
    h = _load_hom(a.hom)
    u = homspace.intertwiner(h, s.tol)
    residual = homspace.intertwiner_residual(h, u)
    return residual <= 1e-8, {"intertwiner": residual}, None, [(a.out, matrix_to_json(u))]


def _cmd_hom_random(a, s):
    h = homspace.random_hom(a.src, a.l, a.seed if a.seed is not None else s.seed)
    return True, {}, None, [(a.out, hom_to_json(h))]


def _cmd_alg_span(a, s):
    gens = _load_alg(a.infile)
    alg = grassmannian.span_subalgebra(list(gens.basis), gens.ambient, s.tol)
    residual = grassmannian.closure_residual(alg, s.tol)
    return residual <= 1e3 * s.tol.abs_eps, {"closure": residual}, \
        {"dim": alg.dim}, [(a.out, subalgebra_to_json(alg))]


def _cmd_alg_centralizer(a, s):
    alg = _load_alg(a.infile)
    z = grassmannian.centralizer(alg, s.tol)
    defect = grassmannian.commutation_defect(alg, z)
    return defect <= 1e-8, {"commutation": defect}, {"dim": z.dim}, \
        [(a.out, subalgebra_to_json(z))]


def _cmd_alg_isk(a, s):
    ok = grassmannian.is_k_subalgebra(_load_alg(a.infile), a.d, s.tol)
    return ok, {}, {"is_k_subalgebra": ok}, []


def _cmd_alg_extract(a, s):
    fr = grassmannian.extract_frame(_load_alg(a.infile), a.d, s.tol)
    report = frames.verify_frame(fr, s.tol)
    return True, {"frame_axioms": report.max_error}, None, [(a.out, frame_to_json(fr))]


def _cmd_alg_grmap(a, s):
    result = grassmannian.gr_map(_load_hom(a.hom), _load_alg(a.aprime),
                                 _load_alg(a.a), _load_alg(a.b), s.tol)
    return True, {}, {"dim": result.dim}, [(a.out, subalgebra_to_json(result))]


def _cmd_alg_ztensor(a, s):
    ok, dist = grassmannian.centralizer_tensor_check(
        _load_hom(a.f), _load_hom(a.g), _load_alg(a.a), _load_alg(a.b),
        _load_alg(a.phi), _load_alg(a.psi), s.tol)
    return ok, {"subspace_distance": dist}, None, []


def _morphism_from_bundle(obj):
    return catverify.make_c_morphism(hom_from_json(obj["hom"]),
                                     frame_from_json(obj["src_frame"]),
                                     frame_from_json(obj["dst_frame"]))


def _cmd_cat_check_morphism(a, s):
    src = _load_frame(a.src_frame)
    ok, residual = catverify.is_c_morphism(
        _load_hom(a.hom), src, _load_frame(a.dst_frame),
        a.split if a.split else src.d, s.tol)
    return ok, {"frame_condition": residual}, None, []


def _cmd_cat_frmap(a, s):
    data = catverify.make_c_morphism(_load_hom(a.hom), _load_frame(a.src_frame),
                                     _load_frame(a.dst_frame), s.tol)
    fr = catverify.fr_map(data, _load_frame(a.arg), s.tol)
    return True, {}, None, [(a.out, frame_to_json(fr))]


def _cmd_cat_naturality(a, s):
    if a.infile:
        obj = load_json(a.infile)
        fd = _morphism_from_bundle(obj["f"])
        gd = _morphism_from_bundle(obj["g"])
        ap = frame_from_json(obj["alpha_prime"])
        pp = frame_from_json(obj["phi_prime"])
    else:
        seed = a.seed if a.seed is not None else s.seed
        cfg = generators.MorphismConfig(2, 1, 2, 2)
        fd = generators.random_c_morphism(cfg, seed)
        gd = generators.random_c_morphism(cfg, seed + 1)
        ap = generators.random_source_frame(cfg, seed + 2)
        pp = generators.random_source_frame(cfg, seed + 3)
    square, witness = catverify.check_naturality(fd, gd, ap, pp, s.tol)
    ok = square <= 1e-8 and witness <= 1e-8
    return ok, {"square": square, "witness": witness}, None, []


def _frame_or_random(path, d, ambient, seed):
    if path:
        return _load_frame(path)
    return frames.random_frame(d, ambient, seed)


def _cmd_cat_assoc(a, s):
    seed = a.seed if a.seed is not None else s.seed
    fa = _frame_or_random(a.a, 2, 2, seed)
    fb = _frame_or_random(a.b, 2, 4, seed + 1)
    fc = _frame_or_random(a.c, 1, 2, seed + 2)
    residual = catverify.check_associativity(fa, fb, fc)
    return residual == 0.0, {"associativity": residual}, None, []


def _cmd_cat_tau(a, s):
    seed = a.seed if a.seed is not None else s.seed
    fa = _frame_or_random(a.a, 2, 2, seed)
    fb = _frame_or_random(a.b, 2, 6, seed + 1)
    residual = catverify.check_tau(fa, fb)
    return residual <= 1e-9, {"tau": residual}, None, []


def _load_chain(path):
    obj = load_json(path)
    return catverify.NerveChain(tuple(hom_from_json(h) for h in obj["homs"]))


def _chain_to_json(chain):
    return {"homs": [hom_to_json(h) for h in chain.homs]}


def _cmd_cat_nerve_face(a, s):
    result = catverify.nerve_face(a.i, _load_chain(a.chain))
    return True, {}, {"levels": list(result.levels)}, [(a.out, _chain_to_json(result))]


def _cmd_cat_bundle_face(a, s):
    chain, t = catverify.bundle_face(a.i, _load_chain(a.chain), _load_matrix(a.matrix))
    payload = {"chain": _chain_to_json(chain), "fiber": matrix_to_json(t)}
    return True, {}, {"levels": list(chain.levels)}, [(a.out, payload)]


def _cmd_fred_index(a, s):
    t = fredholm_from_json(load_json(a.infile))
    idx = fredholm.index(t, s.tol)
    return True, {}, {"index": idx}, []


def _cmd_fred_conj(a, s):
    t = fredholm_from_json(load_json(a.infile))
    result = fredholm.conjugate(_load_matrix(a.unitary), t, s.tol)
    same = fredholm.index(result, s.tol) == fredholm.index(t, s.tol)
    return same, {}, {"index": fredholm.index(result, s.tol)}, \
        [(a.out, fredholm_to_json(result))]


def _cmd_fred_amplify(a, s):
    t = fredholm_from_json(load_json(a.infile))
    result = fredholm.amplify(_load_hom(a.hom), t, s.tol)
    return True, {}, {"index": fredholm.index(result, s.tol)}, \
        [(a.out, fredholm_to_json(result))]


def _cmd_fred_localize(a, s):
    stages = [fredholm_from_json(obj) for obj in load_json(a.stages)]
    value = fredholm.localize_index(stages, a.l, a.start_stage, s.tol)
    return True, {}, {"index": str(value)}, []


def _int_matrix(obj):
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise FormatError("expected a JSON list of integer rows")
    return [[int(x) for x in row] for row in obj]


def _cmd_ab_snf(a, s):
    m = _int_matrix(load_json(a.infile))
    u, d, v = abgroup.smith_normal_form(m)
    factors, _ = abgroup.invariant_factors(m)
    return True, {}, {"diagonal": [d[i][i] for i in range(min(len(d), len(d[0])))],
                      "invariant_factors": factors}, \
        [(a.out, {"u": u, "d": d, "v": v})]


def _cmd_ab_coker(a, s):
    f = grouphom_from_json(load_json(a.infile))
    g = abgroup.cokernel(f)
    factors, rank = g.canonical()
    return True, {}, {"invariant_factors": factors, "free_rank": rank}, \
        [(a.out, group_to_json(g))]


def _cmd_ab_ker(a, s):
    f = grouphom_from_json(load_json(a.infile))
    g = abgroup.kernel(f)
    factors, rank = g.canonical()
    return True, {}, {"invariant_factors": factors, "free_rank": rank}, \
        [(a.out, group_to_json(g))]


def _cmd_ab_localize(a, s):
    g = abgroup.localize(group_from_json(load_json(a.infile)), a.l)
    factors, rank = g.canonical()
    return True, {}, {"invariant_factors": factors, "free_rank": rank}, \
        [(a.out, group_to_json(g))]


def _cmd_ab_colim(a, s):
    obj = load_json(a.file)
    groups = [group_from_json(g) for g in obj["groups"]]
    maps = [abgroup.GroupHom.from_rows(groups[i], groups[i + 1], rows)
            for i, rows in enumerate(obj["maps"])]
    g, stage = abgroup.sequential_colimit(groups, maps, a.invert)
    factors, rank = g.canonical()
    return True, {}, {"invariant_factors": factors, "free_rank": rank,
                      "stable_from": stage}, [(a.out, group_to_json(g))]


def _cmd_suite(a, s):
    seed = a.seed if a.seed is not None else s.seed
    report = run_suite(seed=seed, scale=a.scale)
    residuals = {}
    for battery in report["batteries"]:
        for key, val in battery["residuals"].items():
            residuals[f"{battery['name']}.{key}"] = val
    return report["pass"], residuals, {"batteries": report["batteries"]}, []


_OPERATIONS = {
    "frame make-units": "frames.matrix_unit_frame",
    "frame verify": "frames.verify_frame",
    "frame pi1": "frames.pi1",
    "frame pi2": "frames.pi2",
    "frame dot": "frames.dot",
    "frame tensor": "frames.tensor_frame",
    "frame conj": "frames.conjugate_frame",
    "frame random": "frames.random_frame",
    "hom ev": "homspace.ev",
    "hom iota": "homspace.iota",
    "hom compose": "homspace.compose_phi",
    "hom tensor": "homspace.tensor_hom",
    "hom intertwiner": "homspace.intertwiner",
    "hom random": "homspace.random_hom",
    "alg span": "grassmannian.span_subalgebra",
    "alg centralizer": "grassmannian.centralizer",
    "alg isk": "grassmannian.is_k_subalgebra",
    "alg extract": "grassmannian.extract_frame",
    "alg grmap": "grassmannian.gr_map",
    "alg ztensor": "grassmannian.centralizer_tensor_check",
    "cat check-morphism": "catverify.is_c_morphism",
    "cat frmap": "catverify.fr_map",
    "cat naturality": "catverify.check_naturality",
    "cat assoc": "catverify.check_associativity",
    "cat tau": "catverify.check_tau",
    "cat nerve-face": "catverify.nerve_face",
    "cat bundle-face": "catverify.bundle_face",
    "fred index": "fredholm.index",
    "fred conj": "fredholm.conjugate",
    "fred amplify": "fredholm.amplify",
    "fred localize": "fredholm.localize_index",
    "ab snf": "abgroup.smith_normal_form",
    "ab coker": "abgroup.cokernel",
    "ab ker": "abgroup.kernel",
    "ab localize": "abgroup.localize",
    "ab colim": "abgroup.sequential_colimit",
    "suite": "suite.run_suite",
}


def _cmd_list_ops(a, s):
    return True, {}, {"operations": _OPERATIONS}, []


def _add_out(p):
    p.add_argument("--out", help="write the result object to this JSON file")


def _add_seed(p):
    p.add_argument("--seed", type=int, help="random seed (default from config)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frcalc")
    parser.add_argument("--config", help="path to a key-value config file")
    sub = parser.add_subparsers(dest="module", required=True)

    fr = sub.add_parser("frame").add_subparsers(dest="verb", required=True)
    p = fr.add_parser("make-units")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cofactor", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_frame_make_units)
    p = fr.add_parser("verify")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(handler=_cmd_frame_verify)
    for name, handler in (("pi1", _cmd_frame_pi1), ("pi2", _cmd_frame_pi2)):
        p = fr.add_parser(name)
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--split", type=int, required=True)
        _add_out(p)
        p.set_defaults(handler=handler)
    for name, handler in (("dot", _cmd_frame_dot), ("tensor", _cmd_frame_tensor)):
        p = fr.add_parser(name)
        p.add_argument("--left", required=True)
        p.add_argument("--right", required=True)
        _add_out(p)
        p.set_defaults(handler=handler)
    p = fr.add_parser("conj")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--unitary", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_frame_conj)
    p = fr.add_parser("random")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ambient", type=int, required=True)
    _add_seed(p)
    _add_out(p)
    p.set_defaults(handler=_cmd_frame_random)

    hm = sub.add_parser("hom").add_subparsers(dest="verb", required=True)
    p = hm.add_parser("ev")
    p.add_argument("--hom", required=True)
    p.add_argument("--matrix", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_hom_ev)
    p = hm.add_parser("iota")
    p.add_argument("--hom", required=True)
    p.add_argument("--l", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_hom_iota)
    p = hm.add_parser("compose")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_hom_compose)
    p = hm.add_parser("tensor")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_hom_tensor)
    p = hm.add_parser("intertwiner")
    p.add_argument("--hom", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_hom_intertwiner)
    p = hm.add_parser("random")
    p.add_argument("--src", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    _add_seed(p)
    _add_out(p)
    p.set_defaults(handler=_cmd_hom_random)

    al = sub.add_parser("alg").add_subparsers(dest="verb", required=True)
    p = al.add_parser("span")
    p.add_argument("--in", dest="infile", required=True,
                   help="subalgebra JSON whose basis entries are the generators")
    _add_out(p)
    p.set_defaults(handler=_cmd_alg_span)
    p = al.add_parser("centralizer")
    p.add_argument("--in", dest="infile", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_alg_centralizer)
    p = al.add_parser("isk")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=_cmd_alg_isk)
    p = al.add_parser("extract")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--d", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_alg_extract)
    p = al.add_parser("grmap")
    p.add_argument("--hom", required=True)
    p.add_argument("--aprime", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_alg_grmap)
    p = al.add_parser("ztensor")
    for flag in ("--f", "--g", "--a", "--b", "--phi", "--psi"):
        p.add_argument(flag, required=True)
    p.set_defaults(handler=_cmd_alg_ztensor)

    ct = sub.add_parser("cat").add_subparsers(dest="verb", required=True)
    p = ct.add_parser("check-morphism")
    p.add_argument("--hom", required=True)
    p.add_argument("--src-frame", dest="src_frame", required=True)
    p.add_argument("--dst-frame", dest="dst_frame", required=True)
    p.add_argument("--split", type=int)
    p.set_defaults(handler=_cmd_cat_check_morphism)
    p = ct.add_parser("frmap")
    p.add_argument("--hom", required=True)
    p.add_argument("--src-frame", dest="src_frame", required=True)
    p.add_argument("--dst-frame", dest="dst_frame", required=True)
    p.add_argument("--arg", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_cat_frmap)
    p = ct.add_parser("naturality")
    p.add_argument("--in", dest="infile",
                   help="bundle JSON {f, g, alpha_prime, phi_prime}")
    _add_seed(p)
    p.set_defaults(handler=_cmd_cat_naturality)
    p = ct.add_parser("assoc")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c")
    _add_seed(p)
    p.set_defaults(handler=_cmd_cat_assoc)
    p = ct.add_parser("tau")
    p.add_argument("--a")
    p.add_argument("--b")
    _add_seed(p)
    p.set_defaults(handler=_cmd_cat_tau)
    p = ct.add_parser("nerve-face")
    p.add_argument("--chain", required=True)
    p.add_argument("--i", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_cat_nerve_face)
    p = ct.add_parser("bundle-face")
    p.add_argument("--chain", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--matrix", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_cat_bundle_face)

    fd = sub.add_parser("fred").add_subparsers(dest="verb", required=True)
    p = fd.add_parser("index")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(handler=_cmd_fred_index)
    p = fd.add_parser("conj")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--unitary", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_fred_conj)
    p = fd.add_parser("amplify")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--hom", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_fred_amplify)
    p = fd.add_parser("localize")
    p.add_argument("--stages", required=True, help="JSON list of operator objects")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--start-stage", dest="start_stage", type=int, default=0)
    p.set_defaults(handler=_cmd_fred_localize)

    ab = sub.add_parser("ab").add_subparsers(dest="verb", required=True)
    p = ab.add_parser("snf")
    p.add_argument("--in", dest="infile", required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_ab_snf)
    for name, handler in (("coker", _cmd_ab_coker), ("ker", _cmd_ab_ker)):
        p = ab.add_parser(name)
        p.add_argument("--in", dest="infile", required=True,
                       help="group homomorphism JSON")
        _add_out(p)
        p.set_defaults(handler=handler)
    p = ab.add_parser("localize")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--l", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_ab_localize)
    p = ab.add_parser("colim")
    p.add_argument("--file", required=True, help="JSON {groups, maps}")
    p.add_argument("--invert", type=int, required=True)
    _add_out(p)
    p.set_defaults(handler=_cmd_ab_colim)

    p = sub.add_parser("suite")
    _add_seed(p)
    p.add_argument("--scale", type=float, default=1.0,
                   help="shrink per-battery sample counts by this factor")
    p.add_argument("--k", type=int, help="accepted for compatibility; batteries fix their own shapes")
    p.add_argument("--l", type=int, help="accepted for compatibility; batteries fix their own shapes")
    p.set_defaults(handler=_cmd_suite, verb=None)

    p = sub.add_parser("list-ops")
    p.set_defaults(handler=_cmd_list_ops, verb=None)
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    verb = args.module if args.verb is None else f"{args.module} {args.verb}"
    start = time.monotonic()
    try:
        settings = load_settings(args.config)
        passed, residuals, result, payloads = args.handler(args, settings)
        artifacts = []
        for path, payload in payloads:
            _write(payload, path, artifacts)
    except (FormatError, OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(json.dumps({"verb": verb, "pass": False, "error": str(exc),
                          "residuals": {}, "artifacts": [],
                          "elapsed_ms": 0}, sort_keys=True))
        return 2
    except ValueError as exc:
        print(json.dumps({"verb": verb, "pass": False, "error": str(exc),
                          "residuals": {}, "artifacts": [],
                          "elapsed_ms": 0}, sort_keys=True))
        return 1
    elapsed_ms = int((time.monotonic() - start) * 1000)
    report = {"verb": verb, "pass": bool(passed), "residuals": residuals,
              "artifacts": artifacts, "elapsed_ms": elapsed_ms}
    if result is not None:
        report["result"] = result
    print(json.dumps(report, sort_keys=True))
    return 0 if passed else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
