//! Desk-scale experiments contrasting the classical and quantum realizations.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::algebra::combined_magnitude;
use crate::classical::{gaussian_density, ClassicalState, PhaseSpaceGrid};
use crate::error::{Error, Result};
use crate::quantum::{gaussian_wavepacket, PositionGrid};
use crate::report::{format_real, ScenarioReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    /// Two displaced packets combined: quantum amplitudes vs classical densities.
    Interference,
    /// Magnitude of `s + e^{ib} s` against the combination law, over `b`.
    CorrelationSweep,
    /// Position and momentum spreads of minimal wavepackets over a range of widths.
    Uncertainty,
    /// Magnitude preservation and invertibility of the basis change over grid sizes.
    BasisRoundtrip,
    /// Magnitudes of grouped (tensor product) states.
    GroupDemo,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 5] = [
        ScenarioKind::Interference,
        ScenarioKind::CorrelationSweep,
        ScenarioKind::Uncertainty,
        ScenarioKind::BasisRoundtrip,
        ScenarioKind::GroupDemo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Interference => "interference",
            ScenarioKind::CorrelationSweep => "correlation-sweep",
            ScenarioKind::Uncertainty => "uncertainty",
            ScenarioKind::BasisRoundtrip => "basis-roundtrip",
            ScenarioKind::GroupDemo => "group-demo",
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown scenario '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: ScenarioKind,
    /// Position cells of the quantum grid.
    pub n: usize,
    /// Position cells of the classical grid; defaults to `n`.
    pub nx: Option<usize>,
    /// Momentum cells of the classical grid.
    pub np: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub p_min: f64,
    pub p_max: f64,
    /// Wavepacket position spread.
    pub sigma: f64,
    /// Separation between the two packets.
    pub d: f64,
    /// Mean momentum of the packets.
    pub p0: f64,
    /// Relative phase applied to the second packet.
    pub phase: f64,
    /// Phase step of the correlation sweep.
    pub step: f64,
}

impl ScenarioConfig {
    pub const DEFAULT_N: usize = 512;
    pub const DEFAULT_NP: usize = 256;
    pub const DEFAULT_STEP: f64 = PI / 32.0;

    pub fn new(scenario: ScenarioKind) -> Self {
        ScenarioConfig {
            scenario,
            n: Self::DEFAULT_N,
            nx: None,
            np: Self::DEFAULT_NP,
            x_min: -10.0,
            x_max: 10.0,
            p_min: -10.0,
            p_max: 10.0,
            sigma: 1.0,
            d: 4.0,
            p0: 0.0,
            phase: 0.0,
            step: Self::DEFAULT_STEP,
        }
    }

    pub fn nx(&self) -> usize {
        self.nx.unwrap_or(self.n)
    }

    pub fn position_grid(&self) -> Result<PositionGrid> {
        PositionGrid::new(self.x_min, self.x_max, self.n).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn phase_space_grid(&self) -> Result<PhaseSpaceGrid> {
        PhaseSpaceGrid::new(
            self.x_min,
            self.x_max,
            self.nx(),
            self.p_min,
            self.p_max,
            self.np,
        )
        .map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        self.position_grid()?;
        self.phase_space_grid()?;
        let finite = [
            ("sigma", self.sigma),
            ("d", self.d),
            ("p0", self.p0),
            ("b", self.phase),
            ("step", self.step),
        ];
        if let Some((name, v)) = finite.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Config(format!("{name} = {v} is not finite")));
        }
        if self.sigma <= 0.0 {
            return Err(Error::Config(format!(
                "sigma = {} must be positive",
                self.sigma
            )));
        }
        if self.step <= 0.0 {
            return Err(Error::Config(format!(
                "step = {} must be positive",
                self.step
            )));
        }
        if self.scenario == ScenarioKind::Interference && self.nx() != self.n {
            return Err(Error::Config(format!(
                "interference compares densities on one position grid; nx = {} must equal n = {}",
                self.nx(),
                self.n
            )));
        }
        Ok(())
    }

    /// Every resolved parameter, in a fixed order.
    pub fn echo(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n", self.n.to_string()),
            ("nx", self.nx().to_string()),
            ("np", self.np.to_string()),
            ("xmin", format_real(self.x_min)),
            ("xmax", format_real(self.x_max)),
            ("pmin", format_real(self.p_min)),
            ("pmax", format_real(self.p_max)),
            ("sigma", format_real(self.sigma)),
            ("d", format_real(self.d)),
            ("p0", format_real(self.p0)),
            ("b", format_real(self.phase)),
            ("step", format_real(self.step)),
        ]
    }
}

pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioReport> {
    config.validate()?;
    let mut report = match config.scenario {
        ScenarioKind::Interference => interference(config)?,
        ScenarioKind::CorrelationSweep => correlation_sweep(config)?,
        ScenarioKind::Uncertainty => uncertainty(config)?,
        ScenarioKind::BasisRoundtrip => basis_roundtrip(config)?,
        ScenarioKind::GroupDemo => group_demo(config)?,
    };
    for (key, value) in config.echo() {
        report = report.with_metadata(key, value);
    }
    Ok(report)
}

/// Quantum packets at `-d/2` and `+d/2` (the second rotated by `b`), and
/// classical Gaussians with the same position and momentum marginals.
fn interference(config: &ScenarioConfig) -> Result<ScenarioReport> {
    let grid = config.position_grid()?;
    let half = config.d / 2.0;
    let first = gaussian_wavepacket(grid, -half, config.p0, config.sigma)?;
    let second =
        gaussian_wavepacket(grid, half, config.p0, config.sigma)?.apply_phase(config.phase)?;
    let combined = first.combine(&second)?;
    let quantum_x = combined.density();
    let quantum_p = combined.to_momentum_basis()?.density();

    let phase_grid = config.phase_space_grid()?;
    let sigma_p = 1.0 / (2.0 * config.sigma);
    let classical = ClassicalState::from_fn(
        phase_grid,
        gaussian_density(-half, config.p0, config.sigma, sigma_p),
    )?
    .combine(&ClassicalState::from_fn(
        phase_grid,
        gaussian_density(half, config.p0, config.sigma, sigma_p),
    )?)?;
    let classical_x = classical.marginal_position();

    let mut report = ScenarioReport::new(
        config.scenario.name(),
        [
            "x",
            "quantum_density",
            "classical_density",
            "p",
            "quantum_momentum_density",
        ],
    );
    for j in 0..grid.n() {
        report.push_row(vec![
            grid.x(j),
            quantum_x[j],
            classical_x[j],
            grid.momentum(j),
            quantum_p[j],
        ])?;
    }
    Ok(report)
}

fn correlation_sweep(config: &ScenarioConfig) -> Result<ScenarioReport> {
    let grid = config.position_grid()?;
    let state = gaussian_wavepacket(grid, 0.0, config.p0, config.sigma)?;
    let mut report = ScenarioReport::new(
        config.scenario.name(),
        ["b", "corr", "measured", "predicted", "abs_error"],
    );
    let steps = (2.0 * PI / config.step).ceil() as usize;
    for k in 0..steps {
        let b = k as f64 * config.step;
        if b >= 2.0 * PI {
            break;
        }
        let rotated = state.apply_phase(b)?;
        let corr = state.correlation(&rotated)?;
        let measured = state.combine(&rotated)?.magnitude().value();
        let predicted = combined_magnitude(state.magnitude(), rotated.magnitude(), corr).value();
        report.push_row(vec![
            b,
            corr.value(),
            measured,
            predicted,
            (measured - predicted).abs(),
        ])?;
    }
    Ok(report)
}

/// Widths swept over `sigma * [1/2, 2]` in quarter-octave steps.
pub fn uncertainty_widths(sigma: f64) -> Vec<f64> {
    (-4..=4)
        .map(|k| sigma * 2f64.powf(k as f64 / 4.0))
        .collect()
}

fn uncertainty(config: &ScenarioConfig) -> Result<ScenarioReport> {
    let grid = config.position_grid()?;
    let mut report = ScenarioReport::new(
        config.scenario.name(),
        ["sigma", "sigma_x", "sigma_p", "product"],
    );
    for sigma in uncertainty_widths(config.sigma) {
        let state = gaussian_wavepacket(grid, 0.0, config.p0, sigma)?;
        let sigma_x = state.basis_stddev()?;
        let sigma_p = state.to_momentum_basis()?.basis_stddev()?;
        report.push_row(vec![sigma, sigma_x, sigma_p, sigma_x * sigma_p])?;
    }
    Ok(report)
}

/// Powers of two from 64 up to `n`, plus `n` itself.
pub fn roundtrip_sizes(n: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = std::iter::successors(Some(64usize), |s| s.checked_mul(2))
        .take_while(|&s| s < n)
        .collect();
    sizes.push(n);
    sizes
}

fn basis_roundtrip(config: &ScenarioConfig) -> Result<ScenarioReport> {
    let mut report = ScenarioReport::new(
        config.scenario.name(),
        ["n", "parseval_error", "roundtrip_max_abs_error"],
    );
    let half = config.d / 2.0;
    for n in roundtrip_sizes(config.n) {
        let grid = PositionGrid::new(config.x_min, config.x_max, n)?;
        let state = gaussian_wavepacket(grid, -half, config.p0, config.sigma)?.combine(
            &gaussian_wavepacket(grid, half, -config.p0 - 1.0, config.sigma / 2.0)?
                .apply_phase(config.phase + 0.5)?,
        )?;
        let momentum = state.to_momentum_basis()?;
        let back = momentum.to_position_basis()?;
        let m = state.magnitude().value();
        let parseval = (momentum.magnitude().value() - m).abs() / m;
        let roundtrip = back
            .amplitudes()
            .iter()
            .zip(state.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        report.push_row(vec![n as f64, parseval, roundtrip])?;
    }
    Ok(report)
}

const GROUP_SIZES: [f64; 3] = [0.5, 1.0, 2.0];
const GROUP_PARTNER_SIZES: [f64; 3] = [0.25, 1.0, 3.0];

fn group_demo(config: &ScenarioConfig) -> Result<ScenarioReport> {
    let grid = config.position_grid()?;
    let half = config.d / 2.0;
    let first = gaussian_wavepacket(grid, -half, config.p0, config.sigma)?;
    let second =
        gaussian_wavepacket(grid, half, -config.p0, config.sigma)?.apply_phase(config.phase)?;
    let mut report = ScenarioReport::new(
        config.scenario.name(),
        ["M1", "M2", "M_group", "product_error"],
    );
    for a in GROUP_SIZES {
        for b in GROUP_PARTNER_SIZES {
            let s1 = first.resize(a)?;
            let s2 = second.resize(b)?;
            let (m1, m2) = (s1.magnitude().value(), s2.magnitude().value());
            let grouped = s1.group(&s2).magnitude().value();
            report.push_row(vec![m1, m2, grouped, (grouped - m1 * m2).abs()])?;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(config: &ScenarioConfig) -> ScenarioReport {
        run_scenario(config).unwrap()
    }

    #[test]
    fn scenario_names_round_trip() {
        for kind in ScenarioKind::ALL {
            assert_eq!(kind.name().parse::<ScenarioKind>().unwrap(), kind);
        }
        assert!("bogus".parse::<ScenarioKind>().is_err());
    }

    #[test]
    fn validation() {
        let mut c = ScenarioConfig::new(ScenarioKind::CorrelationSweep);
        c.step = 0.0;
        assert!(matches!(run_scenario(&c), Err(Error::Config(_))));
        let mut c = ScenarioConfig::new(ScenarioKind::Uncertainty);
        c.n = 1;
        assert!(run_scenario(&c).is_err());
        let mut c = ScenarioConfig::new(ScenarioKind::Interference);
        c.nx = Some(100);
        assert!(run_scenario(&c).is_err());
        c.nx = Some(512);
        assert!(run_scenario(&c).is_ok());
        let mut c = ScenarioConfig::new(ScenarioKind::GroupDemo);
        c.sigma = -1.0;
        assert!(run_scenario(&c).is_err());
        c.sigma = 1.0;
        c.x_max = -20.0;
        assert!(run_scenario(&c).is_err());
    }

    #[test]
    fn metadata_echoes_config() {
        let report = run(&ScenarioConfig::new(ScenarioKind::Uncertainty));
        let keys: Vec<_> = report.metadata().iter().map(|(k, _)| k.as_str()).collect();
        assert_eq!(
            keys,
            ["n", "nx", "np", "xmin", "xmax", "pmin", "pmax", "sigma", "d", "p0", "b", "step"]
        );
        assert_eq!(report.metadata()[0].1, "512");
        assert_eq!(report.scenario(), "uncertainty");
    }

    #[test]
    fn destructive_interference_vs_additive_classical() {
        let mut c = ScenarioConfig::new(ScenarioKind::Interference);
        c.d = 0.0;
        c.phase = PI;
        let report = run(&c);
        let quantum = report.column("quantum_density").unwrap();
        let classical = report.column("classical_density").unwrap();
        assert!(quantum.iter().all(|&v| v < 1e-30));
        let center = report
            .column("x")
            .unwrap()
            .iter()
            .position(|x| x.abs() < 0.03)
            .unwrap();
        assert!(classical[center] > 0.0);
        // Two unit Gaussians of width sigma = 1 stacked at the origin.
        let peak = 2.0 / (2.0 * PI).sqrt();
        assert!((classical[center] - peak).abs() < 1e-3);
    }

    #[test]
    fn sweep_starts_constructive() {
        let report = run(&ScenarioConfig::new(ScenarioKind::CorrelationSweep));
        let first = &report.rows()[0];
        assert_eq!(first[0], 0.0);
        assert!((first[2] - 4.0).abs() < 1e-12);
        assert_eq!(report.rows().len(), 64);
        let last_b = report.rows().last().unwrap()[0];
        assert!(last_b < 2.0 * PI);
        for row in report.rows() {
            assert!((row[1] - row[0].cos()).abs() < 1e-12);
            assert!(row[4] <= 1e-10);
        }
    }

    #[test]
    fn uncertainty_rows_are_minimal() {
        let report = run(&ScenarioConfig::new(ScenarioKind::Uncertainty));
        assert_eq!(report.rows().len(), 9);
        for row in report.rows() {
            assert!((row[3] - 0.5).abs() <= 0.01, "{row:?}");
        }
    }

    #[test]
    fn roundtrip_sizes_cover_n() {
        assert_eq!(roundtrip_sizes(512), vec![64, 128, 256, 512]);
        assert_eq!(roundtrip_sizes(300), vec![64, 128, 256, 300]);
        assert_eq!(roundtrip_sizes(16), vec![16]);
        let report = run(&ScenarioConfig::new(ScenarioKind::BasisRoundtrip));
        for row in report.rows() {
            assert!(row[1] <= 1e-10 && row[2] <= 1e-10, "{row:?}");
        }
    }

    #[test]
    fn group_demo_is_multiplicative() {
        let report = run(&ScenarioConfig::new(ScenarioKind::GroupDemo));
        assert_eq!(report.rows().len(), 9);
        for row in report.rows() {
            assert!(row[3] <= 1e-12 * row[0] * row[1], "{row:?}");
        }
    }
}
