"""Formal group laws, algebraic cobordism and fixed-point checks for involutions."""

import json

from . import _core

__all__ = ["run", "fgl", "chern", "verify", "catalog", "euler_number", "fundamental_class", "CommandError"]


class CommandError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(message.strip())
        self.code = code


def run(*args, input=""):
    """Run a CLI command; returns (exit code, stdout, stderr)."""
    return _core.run([str(a) for a in args], input)


def _json(*args, input=""):
    code, out, err = run(*args, input=input)
    if code == 2:
        raise CommandError(code, err)
    return json.loads(out)


def fgl(law="universal", order=6, mult=None, p=None):
    args = ["fgl", "--law", law, "--order", order]
    if mult is not None:
        args += ["--mult", mult]
    if p is not None:
        args += ["--p", p]
    return _json(*args)


def chern(spec, alpha=None):
    args = ["chern", "--spec", json.dumps(spec)]
    if alpha is not None:
        args += ["--alpha", ",".join(map(str, alpha))]
    return _json(*args)


def verify(theorem, action, **params):
    """action is an action dict, or a builtin name with parameters n, a."""
    args = ["verify", "--theorem", theorem]
    if isinstance(action, str):
        args += ["--builtin", action]
        for key in ("n", "a"):
            if key in params:
                args += ["--" + key, params.pop(key)]
    else:
        args += ["--action", json.dumps(action)]
    if "alpha" in params:
        args += ["--alpha", ",".join(map(str, params.pop("alpha")))]
    for key, value in params.items():
        args += ["--" + key.replace("_", "-"), value]
    return _json(*args)


def catalog():
    return _json("catalog", "--json")


def euler_number(spec):
    return int(_core.euler_number(json.dumps(spec)))


def fundamental_class(spec):
    return json.loads(_core.fundamental_class(json.dumps(spec)))
