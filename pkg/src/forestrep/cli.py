"""Command-line client for the service.

Every subcommand builds one POST request.  By default the request runs
against an in-process instance of the app; --server targets a running one.
Exit codes: 0 success, 1 integrity or verification failure, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestrep",
        description="conjugation representations on nilpotent partial maps, exactly",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs) -> argparse.ArgumentParser:
        return sub.add_parser(name, **kwargs)

    p = add("count", help="closed-form stratum size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)

    p = add("enumerate", help="list a stratum in lexicographic one-line notation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--force", action="store_true")

    p = add("oduns", help="canonical forest shapes on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--components", type=int, default=None)
    p.add_argument("--blossoming-only", action="store_true")
    p.add_argument("--force", action="store_true")

    p = add("character", help="stratum character values by cycle type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("fixed", "plethysm"), default="fixed")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true")

    p = add("decompose", help="irreducible multiplicities of a stratum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("plethysm", "fixed"), default="plethysm")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true")

    p = add("decompose-odun", help="analyze one forest shape")
    p.add_argument("--odun", required=True, help='encoding, e.g. "((()))"')

    p = add("table", help="decomposition lines for every stratum of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("plethysm", "fixed"), default="plethysm")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force", action="store_true")

    p = add("sign", help="sign-module multiplicities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--total", action="store_true")
    p.add_argument("--per-stratum", action="store_true")
    p.add_argument("--method", choices=("blossoming", "schur"), default="blossoming")
    p.add_argument("--force", action="store_true")

    p = add("blossoming", help="blossoming forest census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", dest="list_forests")
    p.add_argument("--force", action="store_true")

    p = add("rooks", help="chain-forest (rook) strata")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parts", type=int, required=True)
    p.add_argument("--force", action="store_true")

    p = add("verify", help="run the self-verification suite")
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)

    p = add("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _make_client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=600.0)
    from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app, raise_server_exceptions=False)


_REQUEST_BUILDERS = {
    "count": lambda a: ("/count", {"n": a.n, "k": a.k}),
    "enumerate": lambda a: ("/enumerate", {"n": a.n, "k": a.k, "force": a.force}),
    "oduns": lambda a: (
        "/oduns",
        {"n": a.n, "components": a.components, "blossoming_only": a.blossoming_only,
         "force": a.force},
    ),
    "character": lambda a: (
        "/character",
        {"n": a.n, "k": a.k, "method": a.method, "threads": a.threads, "force": a.force},
    ),
    "decompose": lambda a: (
        "/decompose",
        {"n": a.n, "k": a.k, "method": a.method, "threads": a.threads, "force": a.force},
    ),
    "decompose-odun": lambda a: ("/decompose-odun", {"odun": a.odun}),
    "table": lambda a: (
        "/table",
        {"n": a.n, "method": a.method, "threads": a.threads, "force": a.force},
    ),
    "sign": lambda a: (
        "/sign",
        {"n": a.n, "method": a.method, "total": a.total or not a.per_stratum,
         "per_stratum": a.per_stratum, "force": a.force},
    ),
    "blossoming": lambda a: (
        "/blossoming",
        {"n": a.n, "list_forests": a.list_forests, "force": a.force},
    ),
    "rooks": lambda a: ("/rooks", {"n": a.n, "parts": a.parts, "force": a.force}),
    "verify": lambda a: (
        "/verify",
        {"max_n": a.max_n, "seed": a.seed, "threads": a.threads},
    ),
}


def _part_text(parts: list[int]) -> str:
    return "[" + ",".join(str(p) for p in parts) + "]"


def _render_text(command: str, data: dict) -> str:
    if command == "count":
        return str(data["count"])
    if command == "enumerate":
        return "\n".join(_part_text(m) for m in data["maps"])
    if command == "oduns":
        return "\n".join(o["encoding"] for o in data["oduns"])
    if command == "character":
        return "\n".join(f"{_part_text(v['cycle_type'])} {v['value']}" for v in data["values"])
    if command == "decompose":
        return data["line"]
    if command == "decompose-odun":
        lines = [
            f"odun {data['odun']['encoding']}",
            f"components {data['odun']['components']}",
            "frobenius " + " ".join(
                f"{t['coeff']}*s{_part_text(t['partition'])}"
                for t in data["frobenius_s"]["terms"]
            ),
            f"decomposition {data['line']}",
            f"dimension {data['dimension']}",
            f"sign {data['sign_multiplicity']}",
            f"blossoming {'yes' if data['odun']['blossoming'] else 'no'}",
        ]
        return "\n".join(lines)
    if command == "table":
        return "\n".join(data["lines"])
    if command == "sign":
        lines = []
        if data.get("total") is not None:
            closed = data.get("closed_form_total")
            suffix = f" (closed form {closed})" if closed is not None else ""
            if data.get("matches_closed_form") is False:
                suffix += " [diverges from the closed form]"
            lines.append(f"total {data['total']}{suffix}")
        if data.get("per_stratum") is not None:
            for k in sorted(data["per_stratum"], key=int):
                lines.append(f"k={k} {data['per_stratum'][k]}")
            closed = data.get("closed_form_top")
            suffix = f" (closed form {closed})" if closed is not None else ""
            lines.append(f"top stratum {data['top_stratum']}{suffix}")
        return "\n".join(lines)
    if command == "blossoming":
        closed = data.get("closed_form")
        suffix = f" (closed form {closed})" if closed is not None else ""
        if data.get("matches_closed_form") is False:
            suffix += " [diverges from the closed form]"
        lines = [f"count {data['count']}{suffix}"]
        if data.get("forests") is not None:
            lines.extend(data["forests"])
        return "\n".join(lines)
    if command == "rooks":
        lines = [data["line"]]
        for s in data["shapes"]:
            lines.append(
                f"{_part_text(s['partition'])} {s['encoding']} "
                f"dim={s['dimension']} sign={s['sign_multiplicity']}"
            )
        lines.append(f"shapes {data['shape_count']}, sign count {data['sign_count']}")
        return "\n".join(lines)
    if command == "verify":
        return data["text"]
    return json.dumps(data, indent=2)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    path, payload = _REQUEST_BUILDERS[args.command](args)
    client = _make_client(args.server)
    response = client.post(path, json=payload)
    if response.status_code in (400, 422):
        try:
            message = response.json().get("error") or response.json()
        except ValueError:
            message = response.text
        print(f"error: {message}", file=sys.stderr)
        return 2
    if response.status_code != 200:
        try:
            message = response.json().get("error", response.text)
        except ValueError:
            message = response.text
        print(f"error: {message}", file=sys.stderr)
        return 1
    data = response.json()
    if args.format == "json":
        # documented shapes: decompose emits the bare term array, enumerate a
        # list of {n, image} objects, oduns a list of shape objects
        if args.command == "decompose":
            out = data["terms"]
        elif args.command == "enumerate":
            out = [{"n": data["n"], "image": m} for m in data["maps"]]
        elif args.command == "oduns":
            out = data["oduns"]
        else:
            out = data
        print(json.dumps(out, indent=2))
    else:
        print(_render_text(args.command, data))
    if args.command == "verify" and not data.get("passed", False):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
