from cmldi.bridge.sections import Section, box_section, pipe_section, tee_section
from cmldi.bridge.model import (
    ArchBridgeParams,
    BeamElement,
    FrameModel,
    MaterialSpec,
    build_arch_model,
    build_beam_model,
)
from cmldi.bridge.assembly import assemble, free_dofs
from cmldi.bridge.modal import ModalBasis, eig_basis, modal_analysis
from cmldi.bridge.damage import DamageScenario, apply_damage
from cmldi.bridge.loads import TrainLoad, assemble_moving_load, default_train, track_force_series
from cmldi.bridge.newmark import TransientConfig, newmark_transient, transient_response
from cmldi.bridge.records import (
    SensorRecordSet,
    add_gaussian_noise,
    load_record_csv,
    measured_snr_db,
    normalize_peak,
    save_record_csv,
)
from cmldi.bridge.signatures import (
    ModalSignature,
    frequency_error_percent,
    load_signature_csv,
    perturb_frequencies,
    save_signature_csv,
)

__all__ = [
    "ArchBridgeParams",
    "BeamElement",
    "DamageScenario",
    "FrameModel",
    "MaterialSpec",
    "ModalBasis",
    "ModalSignature",
    "Section",
    "SensorRecordSet",
    "TrainLoad",
    "TransientConfig",
    "add_gaussian_noise",
    "apply_damage",
    "assemble",
    "assemble_moving_load",
    "box_section",
    "build_arch_model",
    "build_beam_model",
    "default_train",
    "eig_basis",
    "free_dofs",
    "frequency_error_percent",
    "load_record_csv",
    "load_signature_csv",
    "measured_snr_db",
    "modal_analysis",
    "newmark_transient",
    "normalize_peak",
    "perturb_frequencies",
    "pipe_section",
    "save_record_csv",
    "save_signature_csv",
    "tee_section",
    "track_force_series",
    "transient_response",
]
