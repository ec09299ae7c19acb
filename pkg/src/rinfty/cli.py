"""Command-line front end.

Subcommands: degree, check, witness, lie-dims, padding, crosscheck,
sample.  Every command takes --format text|json; JSON output is emitted
with sorted keys and embeds the seed and configuration, so identical
invocations produce byte-identical documents.  Exit codes: 0 success,
1 invalid input, 2 resource cap hit.
"""

import json
import os
import sys

import click

from .analysis import (SurfaceSpec, admissibility, is_automorphism_matrix,
                       nonorientable_witness, orientable_witness, rinf_degree,
                       sample_admissible)
from .errors import ResourceLimitError
from .freelie import (StructureTable, build_hall_basis, ideal_quotient,
                      induced_tower, metabelian_truncation, orientable_relator)
from .intlinalg import IntMatrix, charpoly
from .nilpotent import free_nilpotent_group, power_padding
from .oracle import (FiniteTwistedSetup, abelian_reidemeister_count,
                     brute_force_twisted_classes, spectrum_crosscheck)

SCHEMA_REPORT = "cli-report/1"


def _load_table(rank, klass, order, cache_dir):
    """Build a Hall table, round-tripping through the on-disk cache if given."""
    if cache_dir is None:
        return build_hall_basis(rank, klass, order=order)
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir,
                        f"hall-table-r{rank}-c{klass}-{order}.json")
    if os.path.exists(path):
        with open(path) as fh:
            return StructureTable.from_json_dict(json.load(fh))
    table = build_hall_basis(rank, klass, order=order)
    with open(path, "w") as fh:
        json.dump(table.to_json_dict(), fh, sort_keys=True)
    return table


def _save_table(table, cache_dir):
    if cache_dir is None:
        return
    path = os.path.join(cache_dir,
                        f"hall-table-r{table.r}-c{table.c}-{table.order}.json")
    with open(path, "w") as fh:
        json.dump(table.to_json_dict(), fh, sort_keys=True)


def _emit(payload, fmt, text_lines):
    if fmt == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _surface(orientable, genus):
    try:
        return SurfaceSpec(orientable, genus)
    except ValueError as exc:
        raise click.ClickException(str(exc))


_FORMAT = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                       default="text", show_default=True)


@click.group()
def cli():
    """Exact twisted-conjugacy analysis of nilpotent surface-group quotients."""


@cli.command()
@click.option("--orientable/--nonorientable", "orientable", required=True)
@click.option("--genus", type=int, required=True)
@click.option("--samples", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-m", type=int, default=10 ** 40, show_default=False,
              help="cap for the non-orientable twist-exponent search")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@_FORMAT
def degree(orientable, genus, samples, seed, max_m, cache_dir, fmt):
    """Nilpotency degree at which every automorphism forces R-infinity."""
    spec = _surface(orientable, genus)
    context = None
    if cache_dir is not None:
        if orientable:
            table = _load_table(spec.rank, 4, "lex", cache_dir)
            quotient = ideal_quotient(table, orientable_relator(genus, table), 4)
            context = (table, quotient, metabelian_truncation(quotient))
        else:
            context = _load_table(spec.rank, 2 * (genus - 1), "lex", cache_dir)
    verdict = rinf_degree(spec, samples=samples, seed=seed, max_m=max_m,
                          context=context)
    payload = {"schema": SCHEMA_REPORT, "command": "degree",
               "config": {"samples": samples, "seed": seed, "max_m": max_m},
               "verdict": verdict.to_json_dict()}
    lines = [f"degree: {verdict.degree}",
             f"claim: {verdict.claim()}",
             "witness matrix:"]
    lines += ["  " + " ".join(str(x) for x in row)
              for row in verdict.witness_matrix.entries]
    if verdict.witness_m is not None:
        lines.append(f"witness twist exponent m: {verdict.witness_m}")
    lines.append("witness det(I - M_i) by degree: " + ", ".join(
        f"{d}: {v}" for d, v in sorted(verdict.witness_dets.items())))
    if verdict.witness_kfold_at_one:
        lines.append("i-fold product spectra at 1: " + ", ".join(
            f"{i}: {'0' if v == 0 else 'nonzero'}"
            for i, v in sorted(verdict.witness_kfold_at_one.items())))
    if verdict.structural["kind"] == "structural-rinf":
        reports = verdict.structural["sample_reports"]
        lines.append(f"structural certificate: {len(reports)} admissible "
                     f"samples, eigenvalue 1 by degree 4 in all")
    else:
        lines.append("structural certificate: determinant -1 forces "
                     f"eigenvalue 1 at degree {verdict.structural['class']}")
    lines.append(f"note: {verdict.note}")
    _emit(payload, fmt, lines)


@cli.command()
@click.option("--matrix", "matrix_path", type=click.Path(exists=True,
              dir_okay=False), required=True,
              help="matrix file: 'rows cols' header then integer rows")
@click.option("--orientable/--nonorientable", "orientable", required=True)
@click.option("--genus", type=int, required=True)
@click.option("--class", "klass", type=int, required=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@_FORMAT
def check(matrix_path, orientable, genus, klass, cache_dir, fmt):
    """Per-degree eigenvalue-1 report for one abelianized action."""
    spec = _surface(orientable, genus)
    if klass < 1:
        raise click.ClickException("class must be at least 1")
    with open(matrix_path) as fh:
        try:
            s = IntMatrix.from_text(fh.read())
        except ValueError as exc:
            raise click.ClickException(f"matrix file: {exc}")
    n = spec.rank
    if s.rows != n or s.cols != n:
        raise click.ClickException(
            f"matrix must be {n}x{n} for this surface, got {s.rows}x{s.cols}")
    if orientable:
        sign = admissibility(s, genus)
        if sign == "none":
            raise click.ClickException(
                "matrix is not admissible: S*Omega*S^T equals neither "
                "Omega nor -Omega")
        computed = min(klass, 4)
        table = _load_table(n, computed, "lex", cache_dir)
        quotient = ideal_quotient(table, orientable_relator(genus, table),
                                  computed)
        tower = induced_tower(table, s)
        dets = {}
        first = None
        for d in range(1, computed + 1):
            mat = quotient.project(tower.matrix(d), d)
            dets[d] = (IntMatrix.identity(mat.rows) - mat).det()
            if first is None and dets[d] == 0:
                first = d
        _save_table(table, cache_dir)
        extra = {"admissibility": sign}
    else:
        g = genus - 1
        computed = min(klass, 2 * g)
        table = _load_table(g, computed, "lex", cache_dir)
        tower = induced_tower(table, s)
        dets = {}
        first = None
        for d in range(1, computed + 1):
            mat = tower.matrix(d)
            dets[d] = (IntMatrix.identity(mat.rows) - mat).det()
            if first is None and dets[d] == 0:
                first = d
        _save_table(table, cache_dir)
        extra = {"unimodular": is_automorphism_matrix(s)}
    if first is not None:
        verdict = f"R infinite (degree {first})"
    elif computed >= klass:
        verdict = f"R finite (no eigenvalue 1 through degree {klass})"
    else:
        raise ResourceLimitError(
            f"no eigenvalue 1 found through degree {computed}; degrees above "
            f"{computed} are not computed")
    payload = {"schema": SCHEMA_REPORT, "command": "check",
               "config": {"orientable": orientable, "genus": genus,
                          "class": klass},
               "matrix": [list(r) for r in s.entries],
               "dets": {str(d): v for d, v in sorted(dets.items())},
               "first_eigenvalue_one_degree": first,
               "verdict": verdict}
    payload.update(extra)
    lines = [f"checked degrees 1..{computed}",
             "det(I - M_i) by degree: " + ", ".join(
                 f"{d}: {v}" for d, v in sorted(dets.items())),
             verdict]
    _emit(payload, fmt, lines)


@cli.command()
@click.option("--orientable/--nonorientable", "orientable", required=True)
@click.option("--genus", type=int, required=True)
@click.option("--class", "klass", type=int, default=None,
              help="quotient class for the non-orientable witness search")
@click.option("--max-m", type=int, default=10 ** 40)
@_FORMAT
def witness(orientable, genus, klass, max_m, fmt):
    """Explicit matrix whose induced tower avoids eigenvalue 1."""
    spec = _surface(orientable, genus)
    if orientable:
        w = orientable_witness(genus)
        payload = {"schema": SCHEMA_REPORT, "command": "witness",
                   "config": {"orientable": True, "genus": genus},
                   "matrix": [list(r) for r in w.entries],
                   "matrix_text": w.to_text(),
                   "charpoly_coeffs": list(charpoly(w).coeffs),
                   "admissibility": admissibility(w, genus),
                   "claim": "no eigenvalue 1 through degree 3 on the "
                            "relator quotient"}
        lines = ["witness matrix:"]
        lines += ["  " + " ".join(str(x) for x in row) for row in w.entries]
        lines.append(f"characteristic polynomial: {charpoly(w)}")
        _emit(payload, fmt, lines)
        return
    g = genus - 1
    if klass is None:
        klass = 2 * g - 1
    if not 1 <= klass < 2 * g:
        raise click.ClickException(f"class must satisfy 1 <= class < {2 * g}")
    w, m = nonorientable_witness(g, klass, max_m=max_m)
    payload = {"schema": SCHEMA_REPORT, "command": "witness",
               "config": {"orientable": False, "genus": genus,
                          "class": klass, "max_m": max_m},
               "matrix": [list(r) for r in w.entries],
               "matrix_text": w.to_text(),
               "m": m,
               "determinant": w.det(),
               "charpoly_coeffs": list(charpoly(w).coeffs),
               "claim": f"no i-fold product of eigenvalues equals 1 for "
                        f"i <= {klass}, so the class-{klass} quotient "
                        f"admits a finite-Reidemeister automorphism"}
    lines = ["witness matrix:"]
    lines += ["  " + " ".join(str(x) for x in row) for row in w.entries]
    lines += [f"twist exponent m: {m}",
              f"determinant: {w.det()}",
              f"characteristic polynomial: {charpoly(w)}"]
    _emit(payload, fmt, lines)


@cli.command("lie-dims")
@click.option("--rank", type=int, required=True)
@click.option("--class", "klass", type=int, required=True)
@click.option("--order", type=click.Choice(["lex", "alt"]), default="lex",
              show_default=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@_FORMAT
def lie_dims(rank, klass, order, cache_dir, fmt):
    """Per-degree ranks of the free Lie ring (Witt numbers)."""
    if rank < 1 or klass < 1:
        raise click.ClickException("rank and class must be at least 1")
    table = _load_table(rank, klass, order, cache_dir)
    dims = table.dims()
    payload = {"schema": SCHEMA_REPORT, "command": "lie-dims",
               "config": {"rank": rank, "class": klass, "order": order},
               "dims": dims}
    _emit(payload, fmt, [str(dims)])


@cli.command()
@click.option("--rank", type=int, default=2, show_default=True)
@click.option("--class", "klass", type=int, required=True)
@click.option("--n", type=int, required=True)
@_FORMAT
def padding(rank, klass, n, fmt):
    """Padding identity x^n y^f = (x z)^n in the free nilpotent group."""
    if rank < 2:
        raise click.ClickException("rank must be at least 2")
    if n < 2:
        raise click.ClickException("n must be at least 2")
    if klass < 1:
        raise click.ClickException("class must be at least 1")
    group = free_nilpotent_group(rank, klass)
    x, y = group.generator(0), group.generator(1)
    f, z = power_padding(n, x, y)
    payload = {"schema": SCHEMA_REPORT, "command": "padding",
               "config": {"rank": rank, "class": klass, "n": n},
               "f": f,
               "z_coords": list(z.coords),
               "identity": f"x^{n} * y^{f} = (x*z)^{n}"}
    lines = [f"f({n}, {klass}) = {f}",
             f"z coordinates (Malcev basis): {list(z.coords)}",
             f"verified identity: x^{n} * y^{f} = (x*z)^{n}"]
    _emit(payload, fmt, lines)


@cli.command()
@click.option("--what", type=click.Choice(["spectrum", "twisted"]),
              required=True)
@click.option("--rank", type=int, default=2, show_default=True)
@click.option("--class", "klass", type=int, default=2, show_default=True)
@click.option("--count", type=int, default=10, show_default=True,
              help="random matrices for the spectrum mode")
@click.option("--degree", type=int, default=None,
              help="tower degree for the spectrum mode (default: class)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--modulus", type=int, default=3, show_default=True)
@click.option("--matrix", "matrix_path", type=click.Path(exists=True,
              dir_okay=False), default=None,
              help="abelian twist matrix for the twisted mode")
@click.option("--max-order", type=int, default=10 ** 6, show_default=True)
@_FORMAT
def crosscheck(what, rank, klass, count, degree, seed, modulus, matrix_path,
               max_order, fmt):
    """Brute-force oracles versus the exact linear-algebra pipeline."""
    import random as _random
    if what == "spectrum":
        table = build_hall_basis(rank, klass)
        deg = degree if degree is not None else klass
        if not 1 <= deg <= klass:
            raise click.ClickException("degree must lie in 1..class")
        rng = _random.Random(seed)
        failures = []
        for idx in range(count):
            s = IntMatrix([[rng.randint(-2, 2) for _ in range(rank)]
                           for _ in range(rank)])
            if not spectrum_crosscheck(s, table, deg):
                failures.append([list(r) for r in s.entries])
        payload = {"schema": SCHEMA_REPORT, "command": "crosscheck",
                   "config": {"what": what, "rank": rank, "class": klass,
                              "degree": deg, "count": count, "seed": seed},
                   "failures": failures,
                   "passed": count - len(failures)}
        _emit(payload, fmt,
              [f"spectrum crosscheck: {count - len(failures)}/{count} passed"])
        if failures:
            raise click.ClickException("spectrum crosscheck failed")
        return
    if matrix_path is not None:
        with open(matrix_path) as fh:
            m = IntMatrix.from_text(fh.read())
        setup = FiniteTwistedSetup.from_abelian_matrix(m, modulus,
                                                       max_order=max_order)
        brute = brute_force_twisted_classes(setup)
        exact = abelian_reidemeister_count(m)
        payload = {"schema": SCHEMA_REPORT, "command": "crosscheck",
                   "config": {"what": what, "modulus": modulus,
                              "max_order": max_order},
                   "matrix": [list(r) for r in m.entries],
                   "brute_force_classes": brute,
                   "cokernel_count": exact}
        lines = [f"brute-force twisted classes mod {modulus}: {brute}",
                 f"cokernel count over Z: "
                 f"{'infinite' if exact is None else exact}"]
        _emit(payload, fmt, lines)
        return
    setup = FiniteTwistedSetup.identity_twist(rank, klass, modulus,
                                              max_order=max_order)
    brute = brute_force_twisted_classes(setup)
    payload = {"schema": SCHEMA_REPORT, "command": "crosscheck",
               "config": {"what": what, "rank": rank, "class": klass,
                          "modulus": modulus, "max_order": max_order},
               "group_order": setup.group_order(),
               "identity_twist_classes": brute}
    _emit(payload, fmt,
          [f"group order {setup.group_order()}, identity-twist classes "
           f"(= conjugacy classes): {brute}"])


@cli.command()
@click.option("--genus", type=int, required=True)
@click.option("--sign", type=click.Choice(["plus", "minus"]), required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--length", type=int, default=10, show_default=True)
@_FORMAT
def sample(genus, sign, seed, length, fmt):
    """Random admissible matrix (S*Omega*S^T = +-Omega), seed-deterministic."""
    if genus < 1:
        raise click.ClickException("genus must be at least 1")
    s = sample_admissible(genus, sign, seed, length=length)
    payload = {"schema": SCHEMA_REPORT, "command": "sample",
               "config": {"genus": genus, "sign": sign, "seed": seed,
                          "length": length},
               "matrix": [list(r) for r in s.entries],
               "matrix_text": s.to_text(),
               "admissibility": admissibility(s, genus)}
    _emit(payload, fmt, [s.to_text().rstrip("\n")])


def main(argv=None):
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except ResourceLimitError as exc:
        click.echo(f"resource cap: {exc}", err=True)
        return 2
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except click.exceptions.Exit as exc:  # --help and friends
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
