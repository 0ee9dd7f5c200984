//! Shared fixtures for the workspace benchmarks: one representative
//! parameter point per model, pitched at a temperature where the thermal
//! states are full rank and every evaluation route takes its generic path.

#![forbid(unsafe_code)]

use lqu_core::{
    thermal_state_x_closed, thermal_state_z_closed, DensityMatrix4, ModelParams, Temperature,
    XModelParams, XState, ZModelParams,
};

pub fn temperature() -> Temperature {
    Temperature::new(1.0).expect("fixed benchmark temperature")
}

pub fn z_params() -> ZModelParams {
    ZModelParams::new(1.0, 0.5, 1.0).expect("fixed z benchmark point")
}

pub fn x_params() -> XModelParams {
    XModelParams::new(1.0, 0.5, 1.0).expect("fixed x benchmark point")
}

pub fn z_model() -> ModelParams {
    ModelParams::Z(z_params())
}

pub fn x_model() -> ModelParams {
    ModelParams::X(x_params())
}

/// Thermal X state of the z model at the benchmark point.
pub fn z_thermal_state() -> XState {
    thermal_state_z_closed(&z_params(), temperature())
}

/// Thermal density matrix of the x model at the benchmark point.
pub fn x_thermal_density() -> DensityMatrix4 {
    thermal_state_x_closed(&x_params(), temperature())
}
