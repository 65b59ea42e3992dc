/// Tolerances and grid sizes shared by every routine in the crate.
///
/// Algebraic identities are checked at `tol_algebraic`; anything that comes
/// out of an optimizer (λ minimization, phase sweeps, sphere ascent) is
/// judged at `tol_opt`.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub tol_algebraic: f64,
    pub tol_opt: f64,
    /// Points on the θ grid used to bracket `max_θ λ_max(H_θ)`.
    pub theta_grid: usize,
    /// Golden-section termination width in θ.
    pub theta_tol: f64,
    /// Points on the phase grid for `max_φ ω(T + e^{iφ}S)`.
    pub phase_grid: usize,
    /// Per-axis resolution of the brute-force 2×2 oracle.
    pub oracle_grid: usize,
    /// Nelder–Mead stops once the simplex is this small (relative to the search scale).
    pub simplex_tol: f64,
    pub simplex_max_evals: usize,
    /// Random restarts for the sphere ascent used by witness searches.
    pub ascent_restarts: usize,
    /// Two unit vectors are the same point of the sphere modulo phase when `|⟨x,y⟩| > 1 - dedup_gap`.
    pub dedup_gap: f64,
    /// Upper bound on vectors kept by an attainment sample.
    pub attainment_budget: usize,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            tol_algebraic: 1e-9,
            tol_opt: 1e-6,
            theta_grid: 1024,
            theta_tol: 1e-10,
            phase_grid: 512,
            oracle_grid: 2000,
            simplex_tol: 1e-10,
            simplex_max_evals: 4000,
            ascent_restarts: 32,
            dedup_gap: 1e-6,
            attainment_budget: 256,
            seed: 0x005e_ed0f_0e9a,
        }
    }
}

impl Settings {
    /// Grids below 8 points or non-positive tolerances are rejected.
    pub fn validate(&self) -> crate::Result<()> {
        if !(self.tol_algebraic > 0.0 && self.tol_opt > 0.0 && self.theta_tol > 0.0) {
            return Err(crate::Error::InvalidArgument("tolerances must be positive"));
        }
        if self.theta_grid < 8 || self.phase_grid < 8 || self.oracle_grid < 8 {
            return Err(crate::Error::InvalidArgument("grids must have at least 8 points"));
        }
        if self.attainment_budget == 0 || self.ascent_restarts == 0 {
            return Err(crate::Error::InvalidArgument("budgets must be positive"));
        }
        Ok(())
    }
}
