use crate::qstate::{
    self, holevo_helstrom, read_matrix_file, trace_distance, DensityMatrix, PureState, TwoOutcomePovm, C64,
};
use crate::{Error, Result};

/// Trace distance at or below which two label states count as identical.
const MIN_DISTANCE: f64 = 1e-8;

/// The two label states `σ₀`, `σ₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct LabelPair {
    sigma0: DensityMatrix,
    sigma1: DensityMatrix,
    distance: f64,
}

impl LabelPair {
    pub fn new(sigma0: DensityMatrix, sigma1: DensityMatrix) -> Result<Self> {
        let distance = trace_distance(&sigma0, &sigma1)?;
        if distance <= MIN_DISTANCE {
            return Err(Error::IndistinguishableStates { distance });
        }
        Ok(Self { sigma0, sigma1, distance })
    }

    pub fn from_pure(psi0: &PureState, psi1: &PureState) -> Result<Self> {
        Self::new(psi0.to_density(), psi1.to_density())
    }

    /// `|0⟩`, `|1⟩` on a qubit.
    pub fn orthogonal() -> Self {
        Self::new(DensityMatrix::basis(2, 0), DensityMatrix::basis(2, 1)).expect("orthogonal states")
    }

    /// Ground states `(0, 1, 0)` and `(1, −1, 0)/√2` of the noisy preparation example.
    pub fn ground_state_example() -> Self {
        let phi0 = PureState::from_real(&[0.0, 1.0, 0.0]).expect("unit vector");
        let phi1 = PureState::from_real(&[1.0, -1.0, 0.0]).expect("unit vector");
        Self::from_pure(&phi0, &phi1).expect("distinct states")
    }

    /// Pure qubit states whose Holevo-Helstrom measurement has both error
    /// rates equal to `eta`; their overlap is `c = √(1 − (1 − 2η)²)`.
    pub fn symmetric(eta: f64) -> Result<Self> {
        if !(0.0..0.5).contains(&eta) {
            return Err(Error::param(format!("symmetric noise rate {eta} must lie in [0, 1/2)")));
        }
        let s = 1.0 - 2.0 * eta;
        let c = (1.0 - s * s).max(0.0).sqrt();
        let psi0 = PureState::basis(2, 0);
        let psi1 = PureState::new(vec![C64::new(c, 0.0), C64::new(s, 0.0)])?;
        Self::from_pure(&psi0, &psi1)
    }

    /// `orthogonal`, `example1`, `symmetric:<eta>` or `files:<path0>,<path1>`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
        match kind {
            "orthogonal" => Ok(Self::orthogonal()),
            "example1" | "ground-state" => Ok(Self::ground_state_example()),
            "symmetric" => {
                let eta = rest.parse().map_err(|_| Error::Spec(format!("invalid noise rate `{rest}`")))?;
                Self::symmetric(eta)
            }
            "files" => {
                let (a, b) = rest.split_once(',').ok_or_else(|| Error::Spec("files:<path0>,<path1>".into()))?;
                let s0 = DensityMatrix::new(read_matrix_file(a.trim())?)?;
                let s1 = DensityMatrix::new(read_matrix_file(b.trim())?)?;
                Self::new(s0, s1)
            }
            _ => Err(Error::Spec(format!("unknown label pair `{spec}`"))),
        }
    }

    pub fn state(&self, bit: u8) -> &DensityMatrix {
        if bit == 0 {
            &self.sigma0
        } else {
            &self.sigma1
        }
    }

    pub fn sigma0(&self) -> &DensityMatrix {
        &self.sigma0
    }

    pub fn sigma1(&self) -> &DensityMatrix {
        &self.sigma1
    }

    pub fn dim(&self) -> usize {
        self.sigma0.dim()
    }

    /// `‖σ₀ − σ₁‖₁`.
    pub fn trace_distance(&self) -> f64 {
        self.distance
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        self.sigma0.is_pure(tol) && self.sigma1.is_pure(tol)
    }

    /// `√tr[σ₀σ₁]`, which is `|⟨ψ₀|ψ₁⟩|` for pure labels.
    pub fn overlap(&self) -> f64 {
        self.sigma0.overlap_trace(&self.sigma1).expect("same dimension").clamp(0.0, 1.0).sqrt()
    }

    pub fn helstrom(&self) -> TwoOutcomePovm {
        holevo_helstrom(&self.sigma0, &self.sigma1).expect("label states are distinguishable")
    }

    pub fn error_rates(&self, povm: &TwoOutcomePovm) -> Result<qstate::NoisePair> {
        qstate::error_rates(povm, &self.sigma0, &self.sigma1)
    }
}
