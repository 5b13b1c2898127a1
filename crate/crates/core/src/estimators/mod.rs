//! The estimator families: empirical, product-limit (failure and censoring),
//! self-consistent, inverse-probability-of-censoring weighted, and
//! redistribute-to-the-right.

mod ipcw;
mod product_limit;
mod rttr;
mod self_consistent;

pub use ipcw::{ipcw_cdf, ipcw_survival_tilde};
pub use product_limit::{
    censoring_from_relation, censoring_via_inverse_product, naive_survival,
    product_limit_censoring_dagger, product_limit_censoring_naive, product_limit_failure,
};
pub use rttr::{rttr, RttrResult};
pub use self_consistent::{
    self_consistency_map, self_consistency_residual, self_consistent, SelfConsistentResult,
    DEFAULT_MAX_ITER, DEFAULT_TOLERANCE,
};
