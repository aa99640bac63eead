//! Exact verification engine for quiver bundles on the projective line.
//!
//! Every bundle is split, `E_i = ⊕ O(a_ij)`, and every arrow map is a matrix of homogeneous
//! polynomials in `x0, x1`. Cohomology of the two-term complex `C•(E•, E'•)` is computed from
//! explicit bases of `H⁰(O(n))` and Čech `H¹(O(n))`, with all ranks taken over `Q`.

mod bundle;
mod cohomology;
mod hom;
mod poly;
mod random;
mod semistable;

pub use bundle::{QuiverBundleP1, SplitBundle};
pub use cohomology::{
    build_d0, build_d1, differential, ext1_dim, hom_dim, hypercoh_profile, serre_dual_pa,
    CohomologyDegree, Differential, HypercohProfile, SerreDualDims,
};
pub use hom::{hom_intertwiners, is_morphism, HomSpace};
pub use poly::{map_certificate, HomogPoly, PolyMatrix};
pub use random::{
    random_bundle_on, random_bundle_with_summands, random_instance, InstanceLimits,
    InstanceOptions, MapConstraint,
};
pub use semistable::{
    rank_one_stability, split_destabilizer_search, RankOneVerdict, SplitWitness, SubobjectWitness,
    MAX_SPLIT_SEARCH_RANK,
};
