from src.planning.control import ControlProfile, apply_operator, control_operator, synthesize_control
from src.planning.gevrey import DerivativeJet, GevreySpec, gevrey_jet
from src.planning.rest_to_rest import PlanResult, plan_rest_to_rest
from src.planning.simulator import Trajectory, discrete_energy, simulate, stability_bound, transfer_error

__all__ = [
    "ControlProfile",
    "apply_operator",
    "control_operator",
    "synthesize_control",
    "DerivativeJet",
    "GevreySpec",
    "gevrey_jet",
    "PlanResult",
    "plan_rest_to_rest",
    "Trajectory",
    "discrete_energy",
    "simulate",
    "stability_bound",
    "transfer_error",
]
