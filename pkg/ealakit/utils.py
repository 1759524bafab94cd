import hashlib
import json
from functools import wraps
from pathlib import Path
from time import time as timer
from typing import Any, List, Union

from loguru import logger as logging
from pydantic import ValidationError
from pydantic_core import to_jsonable_python

from ealakit.errors import ManifestError


def timeit(func):
    """Calculates the execution time of the function on top of which the decorator is assigned"""

    @wraps(func)
    def wrap_func(*args, **kwargs):
        tic = timer()
        result = func(*args, **kwargs)
        tac = timer()
        logging.info(f"Function {func.__name__!r} executed in {(tac - tic):.4f}s")
        return result

    return wrap_func


def json_pointer(location) -> str:
    """pydantic error location tuple -> RFC 6901 pointer"""
    parts = [str(part).replace("~", "~0").replace("/", "~1") for part in location]
    return "/" + "/".join(parts) if parts else ""


def validation_pointers(error: ValidationError) -> List[dict]:
    return [{"pointer": json_pointer(e["loc"]), "message": e["msg"]} for e in error.errors()]


def manifest_digest(raw: Union[str, bytes]) -> str:
    if isinstance(raw, str):
        raw = raw.encode("utf-8")
    return hashlib.sha256(raw).hexdigest()


def load_manifest(path: Union[str, Path]):
    """Reads and validates a manifest file; returns (Manifest, sha256 of its bytes)"""
    from ealakit.schemas import Manifest

    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as error:
        raise ManifestError(f"Cannot read manifest {path}: {error}", witness=[{"pointer": "", "message": str(error)}])
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as error:
        raise ManifestError(f"Manifest {path} is not valid JSON: {error}", witness=[{"pointer": "", "message": error.msg}])
    try:
        manifest = Manifest.model_validate(data)
        logging.success(f"Manifest {path.name} is valid according to the Pydantic model!")
    except ValidationError as error:
        logging.error(f"Manifest {path.name} is not valid according to the Pydantic model:\n {error}")
        raise ManifestError(f"Manifest {path} failed validation", witness=validation_pointers(error))
    return manifest, manifest_digest(raw)


def dump_json(value: Any) -> str:
    """Canonical report text: sorted keys, fixed separators, trailing newline"""
    return json.dumps(value, default=to_jsonable_python, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
