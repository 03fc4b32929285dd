//! Non-symmetric Macdonald polynomials `E_η`, m-symmetric Macdonald
//! polynomials `P_Λ`, `J_Λ`, and non-symmetric Hall–Littlewood polynomials.

mod msym;
mod nonsym;

pub use msym::{eigenvalue_D, eigenvalue_Y, eta_of, hall_littlewood, verify_eigen, EigenCheck, EigenReport};
pub use nonsym::{eigensolve_E, nonsym_E_alt, MacdonaldCache};

#[cfg(test)]
mod tests;
