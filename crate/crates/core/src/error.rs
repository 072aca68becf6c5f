use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    // special functions
    #[error("series budget exceeded after {terms} terms")]
    SeriesBudgetExceeded { terms: usize },
    #[error("pole of Kummer function: lower parameter b = {b}")]
    KummerPole { b: f64 },
    #[error("gamma pole at z = {z}")]
    GammaPole { z: f64 },
    #[error("connection formula degenerate: 2mu = {two_mu} is an integer")]
    ConnectionDegenerate { two_mu: f64 },
    #[error("use of ascending series out of validated range: |x| = {abs_x} > {limit}")]
    OutOfValidatedRange { abs_x: f64, limit: f64 },

    // Ermakov machinery
    #[error("amplitude radicand negative ({radicand:e}) at q = {at}")]
    RadicandNegative { at: f64, radicand: f64 },
    #[error("invariant undefined at amplitude node")]
    AmplitudeNode,
    #[error("node inside residual window at q = {at}")]
    NodeInResidualWindow { at: f64 },
    #[error("inadmissible Ermakov coefficients: {0}")]
    InadmissibleCoefficients(String),

    // flux sector
    #[error("discriminant branch not covered by closed form (Delta = {delta})")]
    DiscriminantBranch { delta: f64 },
    #[error("momentum pole at theta = {theta}")]
    MomentumPole { theta: f64 },
    #[error("classically forbidden amplitude: Theta = {theta_amp}")]
    ClassicallyForbidden { theta_amp: f64 },
    #[error("branch violation: F/pi = {ratio} < 0")]
    BranchViolation { ratio: f64 },
    #[error("momentum-axis singularity (pi = 0)")]
    MomentumAxisSingularity,
    #[error("axis excluded from stencil (r = {r})")]
    AxisExcluded { r: f64 },
    #[error("quantum potential singular: amplitude node at the evaluation point")]
    QuantumPotentialSingular,
    #[error("current constants violate the zero-sum constraint (sum = {sum:e})")]
    CurrentImbalance { sum: f64 },

    // regularised sector
    #[error("axial branch defined on half-line; mirror by |z| at caller (z = {z})")]
    AxialHalfLine { z: f64 },
    #[error("Whittaker map degenerate (x=0): l = 0")]
    WhittakerDegenerate,
    #[error("canonical inverse-square regularisation point (theta = 0)")]
    CanonicalRegularisationPoint,
    #[error("flux-controlled singularity at theta = {theta} (1 - 2 phi theta = 0)")]
    FluxSingularity { theta: f64 },
    #[error("divergent tail: damping constant {constant} is not negative")]
    DivergentTail { constant: f64 },

    // oracle
    #[error("integration stalled at t = {last_good}")]
    IntegrationStalled { last_good: f64 },
    #[error("quadrature budget exceeded (estimated error {estimate:e})")]
    QuadratureBudgetExceeded { estimate: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
