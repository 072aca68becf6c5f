use super::{worst, Bound, Check, VerifyOptions};
use crate::params::{PhysParams, QuantumNumbers};
use crate::spectrum::{
    degeneracy_splitting, energy_cbr, energy_el, spectral_ordering_check, standard_sweep, SpectrumModel,
};
use crate::Result;

pub(crate) fn checks() -> Vec<Check> {
    vec![
        Check { name: "spectrum.reference_values", bound: Bound::Residual(1e-12), run: reference_values },
        Check { name: "spectrum.ordering", bound: Bound::Fixed(0.0), run: ordering },
        Check { name: "spectrum.splitting", bound: Bound::Residual(1e-12), run: splitting },
        Check { name: "spectrum.shared_axial_term", bound: Bound::Residual(1e-12), run: shared_axial_term },
    ]
}

fn reference_values(opts: &VerifyOptions) -> Result<f64> {
    let field = if opts.inject_fault { 1.0 + 1e-6 } else { 1.0 };
    let p = PhysParams::new(1.0, 1.0, 1.0, field)?;
    let cases = [
        (SpectrumModel::El, QuantumNumbers::new(0, 0, 0.0), 0.5),
        (SpectrumModel::Cbr, QuantumNumbers::new(0, 0, 0.0), 0.75),
        (SpectrumModel::Cbr, QuantumNumbers::new(0, 1, 0.0), 0.5 + 5f64.sqrt() / 4.0),
        (SpectrumModel::Qm, QuantumNumbers::new(0, 3, 0.0), 0.5),
    ];
    Ok(cases.iter().fold(0.0, |m, (model, qn, e)| worst(m, (model.energy(qn, &p) - e).abs())))
}

fn ordering(_: &VerifyOptions) -> Result<f64> {
    let mut violations = 0usize;
    for p in [PhysParams::default(), PhysParams::new(1.0, 2.0, 1.0, 3.0)?] {
        violations += spectral_ordering_check(&standard_sweep(), &p).violations.len();
    }
    Ok(violations as f64)
}

fn splitting(_: &VerifyOptions) -> Result<f64> {
    let p = PhysParams::new(1.0, 2.0, 1.0, 3.0)?;
    let mut out = 0.0f64;
    for qn in standard_sweep() {
        let d = energy_cbr(&qn, &p) - energy_el(&qn, &p);
        out = worst(out, (d - degeneracy_splitting(qn.l, &p)).abs() / energy_cbr(&qn, &p));
    }
    Ok(out)
}

fn shared_axial_term(_: &VerifyOptions) -> Result<f64> {
    let p = PhysParams::new(1.0, 1.3, 1.0, 0.8)?;
    let mut out = 0.0f64;
    for qn in standard_sweep() {
        let flat = QuantumNumbers::new(qn.n_r, qn.l, 0.0);
        let shift = p.axial_kinetic(qn.k_z);
        for m in SpectrumModel::ALL {
            let d = m.energy(&qn, &p) - m.energy(&flat, &p);
            out = worst(out, (d - shift).abs() / shift.max(1.0));
        }
    }
    Ok(out)
}
