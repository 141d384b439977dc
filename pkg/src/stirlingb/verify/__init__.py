"""Identity verification sweeps."""

from stirlingb.verify.identities import IDENTITIES, Identity, get_identity, identity_ids
from stirlingb.verify.models import Counterexample, VerifyReport, VerifyStatus
from stirlingb.verify.runner import ShardPool, run_identity, run_verification

__all__ = [
    "IDENTITIES",
    "Counterexample",
    "Identity",
    "ShardPool",
    "VerifyReport",
    "VerifyStatus",
    "get_identity",
    "identity_ids",
    "run_identity",
    "run_verification",
]
