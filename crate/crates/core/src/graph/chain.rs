use super::VertexSet;

/// True iff the sets are totally ordered by inclusion.
pub fn is_inclusion_chain(sets: &[VertexSet]) -> bool {
    let universe = sets.iter().map(VertexSet::universe).max().unwrap_or(0);
    let lists: Vec<Vec<usize>> = sets.iter().map(VertexSet::to_vec).collect();
    inclusion_chain_violation(&lists, universe).is_none()
}

/// Finds two incomparable sets, returning their indices in `sets`, or `None`
/// when the family is a chain.
///
/// The sets are counting-sorted by decreasing cardinality, then one stamp
/// array is swept: the elements of the i-th set must all carry the stamp of
/// the (i-1)-th. Runs in O(universe + Σ|S|). Members must be distinct and
/// below `universe`.
pub fn inclusion_chain_violation<S: AsRef<[usize]>>(
    sets: &[S],
    universe: usize,
) -> Option<(usize, usize)> {
    if sets.len() < 2 {
        return None;
    }
    let by_size = indices_by_key_desc(sets.len(), |i| sets[i].as_ref().len());

    let mut stamp = vec![usize::MAX; universe];
    for (rank, &idx) in by_size.iter().enumerate() {
        let members = sets[idx].as_ref();
        if rank > 0 && members.iter().any(|&v| stamp[v] != rank - 1) {
            return Some((by_size[rank - 1], idx));
        }
        for &v in members {
            stamp[v] = rank;
        }
    }
    None
}

/// `0..count` ordered by decreasing `key`, ties by increasing index.
/// Counting sort, `O(count + max key)`.
pub(crate) fn indices_by_key_desc(count: usize, key: impl Fn(usize) -> usize) -> Vec<usize> {
    let keys: Vec<usize> = (0..count).map(&key).collect();
    let max_key = keys.iter().copied().max().unwrap_or(0);
    // start[k] = first slot for key k, filled from the largest key down
    let mut start = vec![0usize; max_key + 2];
    for &k in &keys {
        start[max_key - k + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    let mut out = vec![0; count];
    for (i, &k) in keys.iter().enumerate() {
        let slot = &mut start[max_key - k];
        out[*slot] = i;
        *slot += 1;
    }
    out
}
