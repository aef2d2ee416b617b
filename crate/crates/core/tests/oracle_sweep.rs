//! Fixed-seed randomized equivalence sweep: random sub-complexes of the
//! built-in families, checked DFS vs exact cover vs DP.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tristrip::{
    build_family, count_tilings_dfs, count_tilings_dp, exact_cover_count, FamilyId, StripComplex,
};

#[test]
fn fifty_random_subcomplexes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7125_7269);
    for round in 0..50 {
        let family = FamilyId::ALL[rng.gen_range(0..FamilyId::ALL.len())];
        let n = rng.gen_range(1..=5u32);
        let base = build_family(family, n).unwrap();
        let cells = base
            .cells()
            .iter()
            .filter(|_| rng.gen_bool(0.8))
            .copied()
            .collect();
        let sub = StripComplex::new(format!("{}-sub{round}", base.name()), cells);
        let dfs: i64 = count_tilings_dfs(&sub);
        let oracle: i64 = exact_cover_count(&sub).unwrap();
        let dp: i64 = count_tilings_dp(&sub);
        assert_eq!(dfs, oracle, "round {round} on {}", sub.name());
        assert_eq!(dfs, dp, "round {round} on {}", sub.name());
    }
}
