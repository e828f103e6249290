# SPDX-FileCopyrightText: 2024-present Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
from origami.unimodular.realization import RealizationCertificate, TraceStep, realize, verify_certificate
from origami.unimodular.sequence import (
    Reduction,
    UnimodularSequence,
    canonical_form,
    is_unimodular,
    multifan_of_sequence,
    reduce_step,
    winding_number,
)

__all__ = [
    "RealizationCertificate",
    "Reduction",
    "TraceStep",
    "UnimodularSequence",
    "canonical_form",
    "is_unimodular",
    "multifan_of_sequence",
    "realize",
    "reduce_step",
    "verify_certificate",
    "winding_number",
]
