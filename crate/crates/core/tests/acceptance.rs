//! The acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use circone::bracelet::{bracelet_count, enumerate_a_k, enumerate_bracelets, BinarySequence};
use circone::circ_rc::{circ_rc_test, find_forbrowcol, pattern_occurrence, verify_forbrowcol, ForbRowColMember, A_ROW_COL};
use circone::circ_rows::{circ1p_test, find_forbrow, forbrow_enumerate, mi_star, realize, verify_forbrow};
use circone::graphs::{
    extract_from_h2_h4, find_forbidden_concave_round, identify_catalog, is_concave_round, is_proper_helly_ca,
    maximal_cliques, minimal_obstructions, Catalog, CatalogName, Graph, GraphCertificate,
};
use circone::matrix::{canonical_config, contains_config_bruteforce, BinaryMatrix};
use circone::oracles::{brute_circ1p, brute_concave_round, is_minimal_forbidden, is_minimal_non_concave_round, MatrixProperty};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

fn random_matrix(rng: &mut impl Rng, max_rows: usize, max_cols: usize) -> BinaryMatrix {
    let k = rng.random_range(1..=max_rows);
    let l = rng.random_range(1..=max_cols);
    let p = rng.random_range(0.1..=0.9);
    let dense: Vec<Vec<u8>> = (0..k).map(|_| (0..l).map(|_| rng.random_bool(p) as u8).collect()).collect();
    BinaryMatrix::from_dense(l, &dense).unwrap()
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn counting() -> Outcome {
    let start = Instant::now();
    let expected = [2, 10, 8, 13, 18, 30];
    for (k, &want) in (3..=8).zip(&expected) {
        let got = forbrow_enumerate(k).unwrap().len();
        ensure(got == want, || format!("k={k}: {got} members, expected {want}"))?;
    }
    for k in 3..=16 {
        let formula = bracelet_count(k as u32);
        let got = enumerate_bracelets(k).unwrap().len() as u128;
        ensure(got == formula, || format!("k={k}: {got} bracelets, formula {formula}"))?;
        let a_k = enumerate_a_k(k).unwrap().len() as u128;
        let want = if k == 3 { 2 } else { formula };
        ensure(a_k == want, || format!("k={k}: |A_k| = {a_k}, expected {want}"))?;
    }
    let took = within(start, Duration::from_secs(1), "counting")?;
    Ok(format!("2 10 8 13 18 30 for k=3..8; bracelet counts match enumeration for k=3..16 ({took:.2?})"))
}

fn deletions(m: &BinaryMatrix) -> Vec<BinaryMatrix> {
    let rows: Vec<usize> = (1..=m.rows()).collect();
    let cols: Vec<usize> = (1..=m.cols()).collect();
    let mut out = Vec::new();
    for r in &rows {
        let kept: Vec<usize> = rows.iter().copied().filter(|x| x != r).collect();
        out.push(m.select(&kept, &cols).unwrap());
    }
    for c in &cols {
        let kept: Vec<usize> = cols.iter().copied().filter(|x| x != c).collect();
        out.push(m.select(&rows, &kept).unwrap());
    }
    out
}

fn forbrow_suite() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for k in 3..=6 {
        let mut keys = HashSet::new();
        for member in forbrow_enumerate(k).unwrap() {
            let m = realize(&member).unwrap();
            ensure(!brute_circ1p(&m).unwrap(), || format!("{member} has the circular-ones property"))?;
            for d in deletions(&m) {
                ensure(brute_circ1p(&d).unwrap(), || format!("a deletion of {member} still fails"))?;
            }
            ensure(keys.insert(canonical_config(&m).unwrap()), || format!("{member} repeats a configuration"))?;
            total += 1;
        }
    }
    let took = within(start, Duration::from_secs(60), "ForbRow audit")?;
    Ok(format!("{total} members with k<=6 are minimal and pairwise distinct ({took:.2?})"))
}

fn forbrowcol_suite() -> Outcome {
    let start = Instant::now();
    let sporadic: Vec<ForbRowColMember> = A_ROW_COL
        .iter()
        .map(|a| ForbRowColMember::Masked(BinarySequence::parse(a).unwrap()))
        .chain([ForbRowColMember::MVStar, ForbRowColMember::CoMVStar])
        .collect();
    ensure(sporadic.len() == 10, || format!("{} sporadic members", sporadic.len()))?;
    let mut audited = 0;
    let mut keys = HashSet::new();
    for member in sporadic.into_iter().chain((3..=7).flat_map(|k| [ForbRowColMember::MIStar(k), ForbRowColMember::CoMIStar(k)])) {
        let m = member.realize().unwrap();
        ensure(m.rows() <= 7 && m.cols() <= 8, || format!("{member} is {}x{}", m.rows(), m.cols()))?;
        ensure(keys.insert(canonical_config(&m).unwrap()), || format!("{member} repeats a configuration"))?;
        for x in [m.clone(), m.transpose()] {
            ensure(circ_rc_test(&x).is_err(), || format!("{member} passes circ_rc_test"))?;
            ensure(
                is_minimal_forbidden(&x, MatrixProperty::CircularOnesRowsCols).unwrap(),
                || format!("{member} is not deletion-minimal"),
            )?;
        }
        audited += 1;
    }
    let took = within(start, Duration::from_secs(60), "ForbRowCol audit")?;
    Ok(format!("2 families per k plus 10 sporadics; {audited} members (and transposes) minimal ({took:.2?})"))
}

/// The shared corpus for the matrix certification criteria.
fn corpus() -> Vec<BinaryMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut out = Vec::new();
    while out.len() < 10_000 {
        let m = random_matrix(&mut rng, 12, 12);
        if circ1p_test(&m).is_none() {
            out.push(m);
        }
    }
    out
}

fn circ1_certification(corpus: &[BinaryMatrix]) -> Outcome {
    for m in corpus {
        let c = find_forbrow(m).map_err(|e| format!("{m:?}: {e}"))?;
        ensure(verify_forbrow(m, &c), || format!("certificate rejected for {m:?}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    let mut no = 0;
    while checked < 10_000 {
        let m = random_matrix(&mut rng, 12, 7);
        let fast = circ1p_test(&m).is_some();
        ensure(fast == brute_circ1p(&m).unwrap(), || format!("mismatch on {m:?}"))?;
        no += !fast as usize;
        checked += 1;
    }
    Ok(format!("{} NO certificates verified; 0 mismatches on {checked} instances with l<=7 ({no} NO)", corpus.len()))
}

fn circ1rc_certification(corpus: &[BinaryMatrix]) -> Outcome {
    let matrices: Vec<BinaryMatrix> = corpus.iter().flat_map(|m| [m.clone(), m.transpose()]).collect();
    for m in &matrices {
        let c = find_forbrowcol(m).map_err(|e| format!("{m:?}: {e}"))?;
        ensure(verify_forbrowcol(m, &c), || format!("certificate rejected for {m:?}"))?;
        ensure(m.submatrix(&c.embedding).unwrap() == c.realize().unwrap(), || format!("re-extraction differs for {m:?}"))?;
    }
    let t3 = ForbRowColMember::MIStar3T.realize().unwrap();
    let co = ForbRowColMember::CoMIStar3T.realize().unwrap();
    let mut masks = 0;
    for k in 3..=8 {
        for a in enumerate_a_k(k).unwrap() {
            let m = mi_star(k).unwrap().row_complement(&a).unwrap();
            let no_pattern = pattern_occurrence(&a).is_none();
            let member = match a.count_ones() {
                0 => ForbRowColMember::MIStar(k).realize().is_ok(),
                c if c == k => ForbRowColMember::CoMIStar(k).realize().is_ok(),
                _ => ForbRowColMember::Masked(a.clone()).is_well_formed(),
            };
            let clean = contains_config_bruteforce(&m, &t3).is_none() && contains_config_bruteforce(&m, &co).is_none();
            ensure(no_pattern == member && member == clean, || {
                format!("{a}: no pattern {no_pattern}, member {member}, clean {clean}")
            })?;
            masks += 1;
        }
    }
    Ok(format!("{} certificates re-extract; three-way equivalence on {masks} masks, k<=8", matrices.len()))
}

fn graph_catalog_suite() -> Outcome {
    let start = Instant::now();
    let names = minimal_obstructions(8);
    for &name in &names {
        let g = circone::graphs::catalog(name).unwrap();
        ensure(is_concave_round(&g).is_none(), || format!("{name} is concave-round"))?;
        if g.n() <= 8 {
            ensure(is_minimal_non_concave_round(&g).unwrap(), || format!("{name} is not minimal"))?;
        }
        for v in 1..=g.n() {
            let keep: Vec<usize> = (1..=g.n()).filter(|&u| u != v).collect();
            ensure(is_concave_round(&g.induced_subgraph(&keep)).is_some(), || format!("{name} minus {v} fails"))?;
        }
        ensure(identify_catalog(&g) == Some(name), || format!("{name} identifies as {:?}", identify_catalog(&g)))?;
    }
    let took = within(start, Duration::from_secs(60), "catalog audit")?;
    Ok(format!("{} members fail, are deletion-minimal and identify uniquely ({took:.2?})", names.len()))
}

/// `G` with `coH2` or `coH4` planted on `F` and a chordless odd cycle `C` of the complement.
fn planted(rng: &mut impl Rng) -> (Graph, Vec<usize>, Vec<usize>) {
    let name = if rng.random_bool(0.5) { CatalogName::H2 } else { CatalogName::H4 };
    let base = Catalog::builtin().graph(name).unwrap();
    let len = 2 * rng.random_range(1..=6) + 1;
    let extra = rng.random_range(0..=3);
    let n = 7 + len + extra;
    let mut edges = base.edges();
    edges.extend((0..len).map(|i| (8 + i, 8 + (i + 1) % len)));
    let p = rng.random_range(0.02..0.5);
    for u in 1..=7 {
        let anchor = 8 + rng.random_range(0..len);
        for v in 8..8 + len {
            if v == anchor || rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    for u in 8 + len..=n {
        for v in 1..u {
            if rng.random_bool(0.5) {
                edges.push((v, u));
            }
        }
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let h = Graph::from_edges(n, &edges).unwrap().relabel(&perm);
    let f = (1..=7).map(|v| perm[v - 1]).collect();
    let c = (8..8 + len).map(|v| perm[v - 1]).collect();
    (h.complement(), f, c)
}

fn named(g: &Graph, c: &GraphCertificate) -> std::result::Result<CatalogName, String> {
    ensure(c.verify(g), || format!("certificate {c:?} rejected"))?;
    let GraphCertificate::ForbiddenInduced { vertices, .. } = c else {
        return Err(format!("expected a forbidden subgraph, got {c:?}"));
    };
    let name = identify_catalog(&g.induced_subgraph(vertices)).ok_or_else(|| format!("{vertices:?} is not in the catalog"))?;
    ensure(name.is_minimal_obstruction(), || format!("{name} is not a minimal obstruction"))?;
    Ok(name)
}

fn pipeline() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut random = 0;
    while random < 1000 {
        let n = rng.random_range(4..=40);
        let p = rng.random_range(0.05..0.95);
        let g = random_graph(&mut rng, n, p);
        if is_concave_round(&g).is_some() {
            continue;
        }
        named(&g, &find_forbidden_concave_round(&g).map_err(|e| format!("{g:?}: {e}"))?)?;
        random += 1;
    }
    for _ in 0..500 {
        let (g, _, _) = planted(&mut rng);
        named(&g, &find_forbidden_concave_round(&g).map_err(|e| format!("{g:?}: {e}"))?)?;
    }
    let mut runs = 0;
    for _ in 0..5000 {
        let (g, f, c) = planted(&mut rng);
        let out = extract_from_h2_h4(&g, &f, &c).map_err(|e| format!("{f:?} {c:?}: {e}"))?;
        let name = identify_catalog(&g.induced_subgraph(&out));
        ensure(
            matches!(
                name,
                Some(
                    CatalogName::CycleStar(4)
                        | CatalogName::CoC2k(3)
                        | CatalogName::CoH3
                        | CatalogName::CoBIII1
                        | CatalogName::CoC2k1Star(_)
                )
            ),
            || format!("extraction returned {name:?}"),
        )?;
        runs += 1;
    }
    Ok(format!("{random} random and 500 planted graphs certified; {runs}/{runs} extraction runs in range"))
}

/// Graphs on at most 8 vertices as adjacency bitmasks.
type Small = Vec<u8>;

fn canonical(adj: &Small) -> u64 {
    let n = adj.len();
    let deg = |v: usize| adj[v].count_ones();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(deg).collect();
        nd.sort_unstable();
        (deg(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if key(c[0]) == key(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let code = |perm: &[usize]| {
        let mut bits = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                bits = bits << 1 | (adj[perm[i]] >> perm[j] & 1) as u64;
            }
        }
        bits
    };
    fn permute(classes: &[Vec<usize>], i: usize, cur: &mut Vec<usize>, best: &mut u64, code: &dyn Fn(&[usize]) -> u64) {
        if i == classes.len() {
            *best = (*best).min(code(cur));
            return;
        }
        let mut c = classes[i].clone();
        let len = c.len();
        heap_permutations(&mut c, len, &mut |p| {
            let len = cur.len();
            cur.extend_from_slice(p);
            permute(classes, i + 1, cur, best, code);
            cur.truncate(len);
        });
    }
    let mut best = u64::MAX;
    permute(&classes, 0, &mut Vec::new(), &mut best, &code);
    best
}

fn heap_permutations(a: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k {
        heap_permutations(a, k - 1, f);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

fn to_graph(adj: &Small) -> Graph {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u + 1, v + 1)))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// One representative of every isomorphism class, for each `n` up to `max_n`.
fn all_graphs(max_n: usize) -> Vec<Vec<Small>> {
    let mut levels: Vec<Vec<Small>> = vec![vec![vec![]]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &levels[n - 1] {
            for nbrs in 0u32..1 << (n - 1) {
                let mut adj = g.clone();
                for (u, a) in adj.iter_mut().enumerate() {
                    *a |= ((nbrs >> u & 1) as u8) << (n - 1);
                }
                adj.push(nbrs as u8);
                if seen.insert(canonical(&adj)) {
                    next.push(adj);
                }
            }
        }
        levels.push(next);
    }
    levels
}

fn oracle_equivalence() -> Outcome {
    let levels = all_graphs(8);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    let want = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    ensure(counts == want, || format!("isomorphism class counts {counts:?}"))?;
    let mut checked = 0;
    let mut connected8 = 0;
    for (n, level) in levels.iter().enumerate().skip(1) {
        for adj in level {
            let g = to_graph(adj);
            connected8 += (n == 8 && g.is_connected()) as usize;
            let fast = is_concave_round(&g).is_some();
            ensure(fast == brute_concave_round(&g).unwrap(), || format!("mismatch on {g:?}"))?;
            checked += 1;
        }
    }
    ensure(connected8 == 11_117, || format!("{connected8} connected graphs on 8 vertices"))?;
    let small: usize = counts[1..8].iter().sum();
    Ok(format!(
        "0 mismatches on all {checked} graphs with 1<=n<=8 ({small} with n<=7, 11117 connected with n=8)"
    ))
}

fn brute_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let is_clique = |s: u32| {
        (1..=n).all(|u| s >> (u - 1) & 1 == 0 || (u + 1..=n).all(|v| s >> (v - 1) & 1 == 0 || g.has_edge(u, v)))
    };
    let mut out: Vec<Vec<usize>> = (1u32..1 << n)
        .filter(|&s| is_clique(s) && (0..n).all(|v| s >> v & 1 == 1 || !is_clique(s | 1 << v)))
        .map(|s| (1..=n).filter(|v| s >> (v - 1) & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

fn helly_spot_checks() -> Outcome {
    let cliques_agree = |g: &Graph| {
        let mut fast = maximal_cliques(g).unwrap();
        for c in &mut fast {
            c.sort_unstable();
        }
        fast.sort();
        fast == brute_maximal_cliques(g)
    };
    let rejects = [
        ("claw", circone::graphs::catalog(CatalogName::Claw).unwrap()),
        ("net", circone::graphs::catalog(CatalogName::Net).unwrap()),
        ("tent", circone::graphs::catalog(CatalogName::Tent).unwrap()),
        ("C4*", Graph::cycle(4).star()),
        ("coC6", Graph::cycle(6).complement()),
    ];
    for (label, g) in &rejects {
        ensure(cliques_agree(g), || format!("clique enumeration differs on {label}"))?;
        ensure(!is_proper_helly_ca(g).unwrap(), || format!("{label} accepted"))?;
    }
    for n in 4..=12 {
        let g = Graph::cycle(n);
        ensure(cliques_agree(&g) && is_proper_helly_ca(&g).unwrap(), || format!("C{n} rejected"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut intervals = 0;
    for _ in 0..300 {
        let n = rng.random_range(1..=12);
        let len = rng.random_range(0.05..0.6);
        let mut starts: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..1.0)).collect();
        starts.sort_by(f64::total_cmp);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| starts[j] - starts[i] <= len)
            .map(|(i, j)| (i + 1, j + 1))
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        ensure(cliques_agree(&g), || format!("clique enumeration differs on {g:?}"))?;
        ensure(is_proper_helly_ca(&g).unwrap(), || format!("unit interval graph {g:?} rejected"))?;
        intervals += 1;
    }
    Ok(format!("5 obstructions rejected; C4..C12 and {intervals} unit interval graphs accepted"))
}

/// `rows` random arcs of length about `arc` over `cols` columns, circularly placed.
fn circular_instance(rng: &mut impl Rng, rows: usize, cols: usize, arc: usize) -> BinaryMatrix {
    let row_lists: Vec<Vec<usize>> = (0..rows)
        .map(|_| {
            let s = rng.random_range(0..cols);
            let len = rng.random_range(arc / 2..=arc + arc / 2);
            let mut r: Vec<usize> = (0..len).map(|t| (s + t) % cols + 1).collect();
            r.sort_unstable();
            r
        })
        .collect();
    BinaryMatrix::from_rows(cols, row_lists).unwrap()
}

fn best_of(reps: usize, f: impl Fn() -> bool) -> std::result::Result<Duration, String> {
    let mut best = Duration::MAX;
    for _ in 0..reps {
        let t = Instant::now();
        ensure(f(), || "a circular instance was rejected".to_string())?;
        best = best.min(t.elapsed());
    }
    Ok(best)
}

fn scaling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let big = circular_instance(&mut rng, 10_500, 20_000, 10);
    ensure(big.ones() >= 100_000, || format!("instance has only {} ones", big.ones()))?;
    let t = best_of(1, || circ1p_test(&big).is_some())?;
    ensure(t < Duration::from_secs(2), || format!("{} ones took {t:.2?}", big.ones()))?;
    let sizes = [1usize, 2, 4, 8, 16];
    let mut times = Vec::new();
    for &s in &sizes {
        let m = circular_instance(&mut rng, 600 * s, 1200 * s, 10);
        times.push(best_of(3, || circ1p_test(&m).is_some())?);
    }
    let ratio = times[4].as_secs_f64() / times[0].as_secs_f64().max(1e-9);
    let exponent = ratio.ln() / 16f64.ln();
    ensure(exponent < 2.0, || format!("time grew by {ratio:.1}x over a 16x size sweep"))?;
    Ok(format!(
        "{} ones in {t:.2?}; x16 sweep grew {ratio:.1}x (exponent {exponent:.2}): {times:.1?}",
        big.ones()
    ))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("counting", Box::new(counting)),
        ("ForbRow minimality", Box::new(forbrow_suite)),
        ("ForbRowCol minimality", Box::new(forbrowcol_suite)),
        ("circular-ones certification", Box::new(|| circ1_certification(&corpus))),
        ("rows-and-columns certification", Box::new(|| circ1rc_certification(&corpus))),
        ("graph catalog", Box::new(graph_catalog_suite)),
        ("forbidden subgraph pipeline", Box::new(pipeline)),
        ("oracle equivalence", Box::new(oracle_equivalence)),
        ("proper Helly spot checks", Box::new(helly_spot_checks)),
        ("scaling", Box::new(scaling)),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {label}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {label}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
