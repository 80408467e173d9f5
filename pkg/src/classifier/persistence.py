"""
Model file format

    GENDER-MODEL <major>.<minor>\n         header line
    u64 little-endian                      metadata length in bytes
    metadata                               UTF-8 JSON (feature set, vocabularies'
                                           grams, hyperparams, training info)
    float64 little-endian arrays           idf of each vocabulary in order,
                                           weights, then bias, a, b
    32 bytes                               SHA-256 of everything above

Files are written to a temporary file next to the target and renamed into
place, so readers never see a partial model.
"""
import hashlib
import json
import logging
import os
import tempfile
from typing import Tuple

import numpy as np

from src.classifier.model import Calibration, GenderModel, Hyperparams
from src.features.featurizer import Featurizer
from src.features.fields import FeatureSet, FieldTag
from src.features.vocabulary import Vocabulary

logger = logging.getLogger(__name__)

MAGIC = b"GENDER-MODEL "
FORMAT_VERSION = (1, 0)
_DIGEST_SIZE = 32
_F8 = np.dtype("<f8")
_U8 = np.dtype("<u8")


class ModelFormatError(ValueError):
    """Model file is truncated, corrupted or not a model file"""


class ModelVersionError(ModelFormatError):
    """Model file was written by a newer, incompatible format version"""


def _version_string(version: Tuple[int, int]) -> str:
    return f"{version[0]}.{version[1]}"


def model_to_bytes(model: GenderModel) -> bytes:
    """Serialize a model (see module docstring for the layout)"""
    vocabularies = model.featurizer.vocabularies if model.featurizer is not None else ()
    metadata = {
        "feature_set": model.feature_set.value if model.feature_set is not None else None,
        "vocabularies": [
            {
                "field_tag": v.field_tag.value,
                "n_range": list(v.n_range),
                "min_df": v.min_df,
                "grams": list(v.grams),
            }
            for v in vocabularies
        ],
        "dim": model.dim,
        "hyperparams": {
            "regularization": model.hyperparams.regularization,
            "epochs": model.hyperparams.epochs,
            "seed": model.hyperparams.seed,
        },
        "calibrated": model.calibration.fitted,
        "training": model.training,
    }
    meta_bytes = json.dumps(metadata, ensure_ascii=False, sort_keys=True).encode("utf-8")

    parts = [
        MAGIC + _version_string(FORMAT_VERSION).encode("ascii") + b"\n",
        np.array([len(meta_bytes)], dtype=_U8).tobytes(),
        meta_bytes,
    ]
    parts.extend(np.asarray(v.idf, dtype=_F8).tobytes() for v in vocabularies)
    parts.append(np.asarray(model.weights, dtype=_F8).tobytes())
    parts.append(np.array([model.bias, model.calibration.a, model.calibration.b], dtype=_F8).tobytes())

    body = b"".join(parts)
    return body + hashlib.sha256(body).digest()


def _parse_header(data: bytes) -> int:
    """Check magic and version; return the offset after the header line"""
    if not data.startswith(MAGIC):
        raise ModelFormatError("Not a gender model file (bad header)")
    end = data.find(b"\n", len(MAGIC))
    if end < 0:
        raise ModelFormatError("Model file is truncated (incomplete header)")

    raw_version = data[len(MAGIC):end].decode("ascii", errors="replace")
    try:
        major, minor = (int(part) for part in raw_version.split("."))
    except ValueError:
        raise ModelFormatError(f"Unreadable model format version '{raw_version}'")

    supported = _version_string(FORMAT_VERSION)
    if major > FORMAT_VERSION[0]:
        raise ModelVersionError(
            f"Model file format version {major}.{minor} is newer than the supported version {supported}"
        )
    if major < FORMAT_VERSION[0]:
        raise ModelFormatError(
            f"Model file format version {major}.{minor} is older than the supported version {supported}"
        )
    return end + 1


def model_from_bytes(data: bytes) -> GenderModel:
    """
    Deserialize a model

    Raises:
        ModelVersionError: If the file's major version is newer than ours
        ModelFormatError: If the file is truncated or corrupted
    """
    offset = _parse_header(data)

    if len(data) < offset + _U8.itemsize + _DIGEST_SIZE:
        raise ModelFormatError("Model file is truncated")
    body, digest = data[:-_DIGEST_SIZE], data[-_DIGEST_SIZE:]
    if hashlib.sha256(body).digest() != digest:
        raise ModelFormatError("Model file is truncated or corrupted (checksum mismatch)")

    meta_length = int(np.frombuffer(body, dtype=_U8, count=1, offset=offset)[0])
    offset += _U8.itemsize
    if offset + meta_length > len(body):
        raise ModelFormatError("Model metadata length exceeds file size")
    try:
        metadata = json.loads(body[offset:offset + meta_length].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ModelFormatError(f"Unreadable model metadata: {e}")
    offset += meta_length

    def read_floats(count: int) -> np.ndarray:
        nonlocal offset
        size = count * _F8.itemsize
        if offset + size > len(body):
            raise ModelFormatError("Model arrays are shorter than the metadata says")
        values = np.frombuffer(body, dtype=_F8, count=count, offset=offset).copy()
        offset += size
        return values

    try:
        vocabularies = []
        for entry in metadata["vocabularies"]:
            grams = tuple(entry["grams"])
            vocabularies.append(Vocabulary(
                grams=grams,
                idf=read_floats(len(grams)),
                n_range=tuple(entry["n_range"]),
                min_df=int(entry["min_df"]),
                field_tag=FieldTag(entry["field_tag"]),
            ))
        weights = read_floats(int(metadata["dim"]))
        bias, a, b = read_floats(3)
        if offset != len(body):
            raise ModelFormatError("Model file has trailing data")

        featurizer = None
        if metadata["feature_set"] is not None:
            featurizer = Featurizer(FeatureSet(metadata["feature_set"]), tuple(vocabularies))

        return GenderModel(
            weights=weights,
            bias=float(bias),
            calibration=Calibration(a=float(a), b=float(b), fitted=bool(metadata["calibrated"])),
            hyperparams=Hyperparams(**metadata["hyperparams"]),
            featurizer=featurizer,
            training=metadata.get("training", {}),
            model_version=f"{_version_string(FORMAT_VERSION)}-{digest.hex()[:12]}",
        )
    except ModelFormatError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise ModelFormatError(f"Invalid model content: {e}")


def save_model(model: GenderModel, path: str) -> str:
    """
    Write a model atomically

    Returns:
        The model_version (fingerprint) of the written file
    """
    data = model_to_bytes(model)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)

    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".model-", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise

    version = f"{_version_string(FORMAT_VERSION)}-{hashlib.sha256(data[:-_DIGEST_SIZE]).hexdigest()[:12]}"
    logger.info(f"Saved model ({model.dim} features) to {path} [{version}]")
    return version


def load_model(path: str) -> GenderModel:
    """
    Read a model written by save_model

    Raises:
        OSError: If the file cannot be read
        ModelVersionError, ModelFormatError: See model_from_bytes
    """
    with open(path, "rb") as f:
        data = f.read()
    model = model_from_bytes(data)
    logger.info(f"Loaded model from {path} [{model.model_version}]")
    return model
