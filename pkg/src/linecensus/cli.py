"""Command-line front end.

Every subcommand builds a request model and either calls the shared
handler in process (default) or POSTs it to a running service when
--server is given.  Exit codes: 0 success, 1 a proved inequality was
violated by an actual count (a correctness alarm), 2 bad configuration.
"""

import argparse
import json
import sys

from .errors import LineCensusError
from .service import handlers, schemas
from .service.handlers import CONFIG_ERRORS

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2

_PATHS = {
    "census": "/census",
    "smooth": "/tools/smooth",
    "classical": "/tools/classical",
    "aux": "/tools/aux",
    "hessian": "/tools/hessian",
    "bounds": "/tools/bounds",
    "classify-line": "/tools/classify-line",
    "search": "/tools/search",
    "gallery": "/tools/gallery",
}


def _remote(server: str, command: str, req) -> dict:
    import httpx

    url = server.rstrip("/") + _PATHS[command]
    resp = httpx.post(url, json=req.model_dump(), timeout=600.0)
    if resp.status_code == 400:
        raise ValueError(resp.json().get("detail", "bad request"))
    resp.raise_for_status()
    return resp.json()


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _census_exit_code(report_json: dict) -> int:
    for name, row in report_json["bounds"].items():
        if row["applicable"] is True and row["satisfied"] is False:
            print(f"bound violated: {name}", file=sys.stderr)
            return EXIT_VIOLATION
    return EXIT_OK


def _surface_request(cls, args, **extra):
    return cls(field=args.field, surface=args.surface, gallery=args.gallery,
               d=args.d, seed=args.seed, **extra)


def cmd_census(args) -> int:
    req = _surface_request(schemas.CensusRequest, args,
                           workers=args.workers,
                           groebner_cap=args.groebner_cap,
                           ext_cap=args.ext_cap,
                           budget_q=args.budget,
                           assume_irreducible=args.assume_irreducible)
    if args.server:
        data = _remote(args.server, "census", req)
        _emit(json.dumps(data, indent=2), args.out)
    else:
        report = handlers.handle_census(req)
        data = report.to_json()
        _emit(report.to_json_text(), args.out)
    return _census_exit_code(data)


def _tool_command(name: str, args, req) -> int:
    if args.server:
        data = _remote(args.server, name, req)
    else:
        fn = getattr(handlers, "handle_" + name.replace("-", "_"))
        data = fn(req)
    if name == "aux":
        _emit(data["text"], args.out)
    else:
        _emit(json.dumps(data, indent=2), args.out)
    return EXIT_OK


def cmd_smooth(args) -> int:
    req = _surface_request(schemas.SmoothRequest, args,
                           groebner_cap=args.groebner_cap,
                           ext_cap=args.ext_cap)
    return _tool_command("smooth", args, req)


def cmd_classical(args) -> int:
    req = _surface_request(schemas.ClassicalRequest, args, r=args.r,
                           assume_irreducible=args.assume_irreducible)
    return _tool_command("classical", args, req)


def cmd_aux(args) -> int:
    req = _surface_request(schemas.AuxRequest, args, m=args.m, n=args.n)
    return _tool_command("aux", args, req)


def cmd_hessian(args) -> int:
    req = _surface_request(schemas.HessianRequest, args,
                           assume_irreducible=args.assume_irreducible)
    return _tool_command("hessian", args, req)


def cmd_bounds(args) -> int:
    req = schemas.BoundsRequest(q=args.q, d=args.d)
    return _tool_command("bounds", args, req)


def cmd_classify_line(args) -> int:
    req = _surface_request(schemas.ClassifyLineRequest, args, line=args.line)
    return _tool_command("classify-line", args, req)


def cmd_search(args) -> int:
    req = schemas.SearchRequest(field=args.field, budget=args.budget,
                                seed=args.seed,
                                groebner_cap=args.groebner_cap,
                                ext_cap=args.ext_cap)
    return _tool_command("search", args, req)


def cmd_gallery(args) -> int:
    req = schemas.GalleryRequest(field=args.field, name=args.gallery,
                                 d=args.d, seed=args.seed, budget=args.budget)
    return _tool_command("gallery", args, req)


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_field(p) -> None:
    p.add_argument("--field", required=True,
                   help="field literal: 'p' or 'p^e' with p prime")


def _add_surface(p) -> None:
    p.add_argument("--surface",
                   help="polynomial text, or a path to a file holding one")
    p.add_argument("--gallery",
                   help="named surface: katz, fermat, spacefilling, "
                        "nonreflexive, random")
    p.add_argument("--d", type=int, help="degree parameter for gallery names")
    p.add_argument("--seed", type=int, default=0)


def _add_caps(p) -> None:
    p.add_argument("--groebner-cap", type=int, default=64)
    p.add_argument("--ext-cap", type=int, default=3)


def _add_io(p) -> None:
    p.add_argument("--out", help="write the output here instead of stdout")
    p.add_argument("--server", help="base URL of a running service")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="linecensus",
        description="exact census of rational lines against a surface in P^3")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="classify all lines and check bounds")
    _add_field(p)
    _add_surface(p)
    _add_caps(p)
    _add_io(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=13,
                   help="largest q the census will attempt")
    p.add_argument("--assume-irreducible", action="store_true")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("smooth", help="exact smoothness certificate")
    _add_field(p)
    _add_surface(p)
    _add_caps(p)
    _add_io(p)
    p.set_defaults(fn=cmd_smooth)

    p = sub.add_parser("classical", help="Frobenius classicality for power r")
    _add_field(p)
    _add_surface(p)
    _add_io(p)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--assume-irreducible", action="store_true")
    p.set_defaults(fn=cmd_classical)

    p = sub.add_parser("aux", help="print the twisted auxiliary surface")
    _add_field(p)
    _add_surface(p)
    _add_io(p)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=0)
    p.set_defaults(fn=cmd_aux)

    p = sub.add_parser("hessian",
                       help="does the Hessian determinant vanish on S?")
    _add_field(p)
    _add_surface(p)
    _add_io(p)
    p.add_argument("--assume-irreducible", action="store_true")
    p.set_defaults(fn=cmd_hessian)

    p = sub.add_parser("bounds", help="bound sheet for (q, d)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_io(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("classify-line", help="classify one line literal")
    _add_field(p)
    _add_surface(p)
    _add_io(p)
    p.add_argument("--line", required=True,
                   help="'a0,a1,a2,a3|b0,b1,b2,b3'")
    p.set_defaults(fn=cmd_classify_line)

    p = sub.add_parser("search",
                       help="seeded hunt for smooth space-filling members")
    _add_field(p)
    _add_caps(p)
    _add_io(p)
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("gallery", help="emit a named surface")
    _add_field(p)
    p.add_argument("--gallery", required=True,
                   help="katz, fermat, spacefilling, nonreflexive, random")
    p.add_argument("--d", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int,
                   help="attempt cap for the random generator")
    _add_io(p)
    p.set_defaults(fn=cmd_gallery)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8321)
    p.set_defaults(fn=cmd_serve)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CONFIG_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except LineCensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
