"""Sparse Tucker tensor recovery: four-stage pipeline and utilities."""

try:
    from ._sptucker import (
        FactorSet,
        NumericalError,
        RecoveryConfig,
        SizeGuardError,
        frobenius_error,
        kronecker_operator,
        make_instance,
        mode_n_product,
        postprocess,
        read_dtf,
        recover,
        soft_threshold,
        support_scores,
        write_dtf,
    )
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _sptucker import (
        FactorSet,
        NumericalError,
        RecoveryConfig,
        SizeGuardError,
        frobenius_error,
        kronecker_operator,
        make_instance,
        mode_n_product,
        postprocess,
        read_dtf,
        recover,
        soft_threshold,
        support_scores,
        write_dtf,
    )

__all__ = [
    "FactorSet",
    "NumericalError",
    "RecoveryConfig",
    "SizeGuardError",
    "frobenius_error",
    "kronecker_operator",
    "make_instance",
    "mode_n_product",
    "postprocess",
    "read_dtf",
    "recover",
    "soft_threshold",
    "support_scores",
    "write_dtf",
]
