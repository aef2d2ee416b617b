use crate::lattice::{conflict_graph, StripComplex};
use crate::scalar::Count;

/// Counts tilings by branching on the first placement, in canonical
/// order, that is neither used nor blocked. Every independent placement
/// set is reached exactly once.
pub fn count_tilings_dfs<T: Count>(complex: &StripComplex) -> T {
    dfs_aggregates::<T>(complex).0
}

/// (tilings, sum of placement counts over all tilings).
pub(crate) fn dfs_aggregates<T: Count>(complex: &StripComplex) -> (T, T) {
    let adj = conflict_graph(complex).adjacency();
    let mut blocked = vec![0u32; adj.len()];
    recurse(&adj, &mut blocked, 0)
}

fn recurse<T: Count>(adj: &[Vec<usize>], blocked: &mut [u32], from: usize) -> (T, T) {
    let Some(v) = (from..blocked.len()).find(|&v| blocked[v] == 0) else {
        return (T::one(), T::zero());
    };
    let (skip_count, skip_larges) = recurse::<T>(adj, blocked, v + 1);
    for &w in &adj[v] {
        blocked[w] += 1;
    }
    let (take_count, take_larges) = recurse::<T>(adj, blocked, v + 1);
    for &w in &adj[v] {
        blocked[w] -= 1;
    }
    // Every tiling in the take-branch gains placement v.
    (
        skip_count + take_count.clone(),
        skip_larges + take_larges + take_count,
    )
}

/// Branch-parallel variant: the skip/take subtrees near the root run on
/// a dedicated pool. Sums are associative, so the result is identical
/// to the sequential count for any schedule.
pub fn count_tilings_dfs_parallel<T: Count>(complex: &StripComplex, threads: usize) -> T {
    if threads <= 1 {
        return count_tilings_dfs(complex);
    }
    let adj = conflict_graph(complex).adjacency();
    let blocked = vec![0u32; adj.len()];
    let split_depth = usize::BITS - threads.leading_zeros() + 2;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| recurse_parallel::<T>(&adj, blocked, 0, split_depth).0)
}

fn recurse_parallel<T: Count>(
    adj: &[Vec<usize>],
    mut blocked: Vec<u32>,
    from: usize,
    depth: u32,
) -> (T, T) {
    if depth == 0 {
        return recurse(adj, &mut blocked, from);
    }
    let Some(v) = (from..blocked.len()).find(|&v| blocked[v] == 0) else {
        return (T::one(), T::zero());
    };
    let mut taken = blocked.clone();
    for &w in &adj[v] {
        taken[w] += 1;
    }
    let ((skip_count, skip_larges), (take_count, take_larges)) = rayon::join(
        || recurse_parallel::<T>(adj, blocked, v + 1, depth - 1),
        || recurse_parallel::<T>(adj, taken, v + 1, depth - 1),
    );
    (
        skip_count + take_count.clone(),
        skip_larges + take_larges + take_count,
    )
}
