use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;

use cqlearn::analysis::{
    copies_needed, hamming_distance, loss_class_contraction, mutual_info_single_example, rademacher_of_vectors,
    risk_comparison, true_risk, RademacherMode, IDENTITY_TOL,
};
use cqlearn::concepts::{s_equivalence_classes, vc_dimension_bruteforce, Concept, ConceptClass, Domain};
use cqlearn::experiment::{read_records, write_records, TrialRecord};
use cqlearn::learners::{noise_corrected_loss, subsample_count, subsample_ranges, subsamples};
use cqlearn::par::Execution;
use cqlearn::qstate::{
    fidelity, format_complex, mixture_eigenvalues, parse_complex, random, trace_distance, NoisePair,
    TwoOutcomePovm, C64,
};
use cqlearn::rng::{rng_from_seed, SimRng};
use cqlearn::sampling::{
    agnostic_hard_family, draw_quantum_sample, induced_nu, Atom, LabelPair, LabeledDistribution,
};

fn random_class(rng: &mut SimRng, n: usize, size: usize) -> ConceptClass {
    let mut seen = BTreeSet::new();
    while seen.len() < size.min(1 << n) {
        seen.insert(rng.random_range(0..1u32 << n));
    }
    let members = seen.into_iter().map(|k| Concept::from_fn(n, |x| k >> x & 1 == 1)).collect();
    ConceptClass::explicit(Domain::line(n).unwrap(), members).unwrap()
}

fn random_distribution(rng: &mut SimRng, n: usize) -> LabeledDistribution {
    let weights: Vec<f64> = (0..2 * n).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let support =
        (0..2 * n).map(|i| Atom { instance: i / 2, bit: (i % 2) as u8, prob: weights[i] / total }).collect();
    LabeledDistribution::new(support).unwrap()
}

fn random_labels(rng: &mut SimRng, dim: usize, pure: bool) -> LabelPair {
    loop {
        let pair = if pure {
            LabelPair::from_pure(&random::pure_state(dim, rng), &random::pure_state(dim, rng))
        } else {
            LabelPair::new(random::mixed_state(dim, rng), random::mixed_state(dim, rng))
        };
        if let Ok(p) = pair {
            if p.trace_distance() > 0.05 {
                return p;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fuchs_van_de_graaf(seed: u64, dim in 1usize..=4) {
        let mut rng = rng_from_seed(seed);
        let rho = random::mixed_state(dim, &mut rng);
        let sigma = random::mixed_state(dim, &mut rng);
        let f = fidelity(&rho, &sigma).unwrap();
        let t = 0.5 * trace_distance(&rho, &sigma).unwrap();
        prop_assert!(1.0 - f <= t + 1e-9);
        prop_assert!(t <= (1.0 - f * f).max(0.0).sqrt() + 1e-9);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&f));
    }

    #[test]
    fn fidelity_is_multiplicative(seed: u64, d1 in 1usize..=3, d2 in 1usize..=3) {
        let mut rng = rng_from_seed(seed);
        let (r1, s1) = (random::mixed_state(d1, &mut rng), random::mixed_state(d1, &mut rng));
        let (r2, s2) = (random::mixed_state(d2, &mut rng), random::mixed_state(d2, &mut rng));
        let joint = fidelity(&r1.tensor(&r2), &s1.tensor(&s2)).unwrap();
        let product = fidelity(&r1, &s1).unwrap() * fidelity(&r2, &s2).unwrap();
        prop_assert!((joint - product).abs() < 1e-9);
    }

    #[test]
    fn helstrom_beats_random_measurements(seed: u64, dim in 2usize..=4) {
        let mut rng = rng_from_seed(seed);
        let labels = random_labels(&mut rng, dim, false);
        let best = labels.helstrom().success_probability(labels.sigma0(), labels.sigma1()).unwrap();
        prop_assert!((best - 0.5 * (1.0 + 0.5 * labels.trace_distance())).abs() < 1e-9);
        for _ in 0..10 {
            let other: TwoOutcomePovm = random::projective_povm(dim, &mut rng);
            let p = other.success_probability(labels.sigma0(), labels.sigma1()).unwrap();
            prop_assert!(p <= best + 1e-9);
        }
    }

    #[test]
    fn mixture_eigenvalues_match_dense(seed: u64, dim in 2usize..=4, alpha in 0.0f64..=1.0) {
        let mut rng = rng_from_seed(seed);
        let psi = random::pure_state(dim, &mut rng);
        let phi = random::pure_state(dim, &mut rng);
        let beta = 1.0 - alpha;
        let (hi, lo) = mixture_eigenvalues(alpha, beta, &psi, &phi).unwrap();
        let dense = psi.projector().scale(alpha).as_dmatrix() + phi.projector().scale(beta).as_dmatrix();
        let mut eig: Vec<f64> = nalgebra::SymmetricEigen::new(dense).eigenvalues.iter().copied().collect();
        eig.sort_by(|a, b| b.total_cmp(a));
        prop_assert!((eig[0] - hi).abs() < 1e-10);
        prop_assert!((eig[1] - lo).abs() < 1e-10);
        prop_assert!(eig[2..].iter().all(|v| v.abs() < 1e-10));
    }

    #[test]
    fn noise_corrected_loss_is_unbiased(eta0 in 0.0f64..0.49, eta1 in 0.0f64..0.49) {
        let noise = NoisePair::new(eta0, eta1).unwrap();
        for y1 in 0..2u8 {
            for y in 0..2u8 {
                let keep = noise_corrected_loss(y1, y, noise).unwrap();
                let flip = noise_corrected_loss(y1, 1 - y, noise).unwrap();
                let mean = (1.0 - noise.eta(y)) * keep + noise.eta(y) * flip;
                prop_assert!((mean - f64::from(y1 != y)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn measured_law_keeps_the_marginal(seed: u64, n in 1usize..=6, dim in 2usize..=3) {
        let mut rng = rng_from_seed(seed);
        let labels = random_labels(&mut rng, dim, false);
        let mu = random_distribution(&mut rng, n);
        let nu = induced_nu(&mu, &labels.helstrom(), &labels).unwrap();
        for ((x, p), (y, q)) in mu.marginal().into_iter().zip(nu.marginal()) {
            prop_assert_eq!(x, y);
            prop_assert!((p - q).abs() < 1e-12);
        }
    }

    #[test]
    fn risk_identity_holds_for_helstrom(seed: u64, n in 1usize..=5, dim in 2usize..=3) {
        let mut rng = rng_from_seed(seed);
        let labels = random_labels(&mut rng, dim, false);
        let mu = random_distribution(&mut rng, n);
        let class = random_class(&mut rng, n, 4);
        for g in class.members() {
            let cmp = risk_comparison(g, &class, &mu, &labels, &labels.helstrom()).unwrap();
            prop_assert!(cmp.all_hold(IDENTITY_TOL));
        }
    }

    #[test]
    fn vc_dimension_is_monotone(seed: u64, n in 1usize..=5, size in 1usize..=12) {
        let mut rng = rng_from_seed(seed);
        let big = random_class(&mut rng, n, size);
        let keep: Vec<Concept> =
            big.members().iter().filter(|_| rng.random_bool(0.5)).cloned().collect();
        prop_assume!(!keep.is_empty());
        let small = ConceptClass::explicit(big.domain().clone(), keep).unwrap();
        prop_assert!(vc_dimension_bruteforce(&small).unwrap() <= vc_dimension_bruteforce(&big).unwrap());
    }

    #[test]
    fn sample_partitions_obey_sauer(seed: u64, n in 1usize..=6, size in 1usize..=20, m in 1usize..=8) {
        let mut rng = rng_from_seed(seed);
        let class = random_class(&mut rng, n, size);
        let sample: Vec<usize> = (0..m).map(|_| rng.random_range(0..n)).collect();
        let distinct = sample.iter().collect::<BTreeSet<_>>().len();
        let d = vc_dimension_bruteforce(&class).unwrap();
        let partition = s_equivalence_classes(&class, &sample).unwrap();
        prop_assert!(partition.within_sauer_bound(distinct, d));
        prop_assert!(partition.cells() <= class.len());
    }

    #[test]
    fn subsample_structure(m in 1usize..=400) {
        let ranges = subsample_ranges(m);
        prop_assert_eq!(ranges.len(), subsample_count(m));
        let len: usize = ranges[0].iter().map(|r| r.len()).sum();
        for rs in &ranges {
            let idx: Vec<usize> = rs.iter().flat_map(|r| r.clone()).collect();
            prop_assert_eq!(idx.len(), len);
            prop_assert!(idx.iter().all(|&i| i < m));
            prop_assert_eq!(idx.iter().collect::<BTreeSet<_>>().len(), idx.len());
        }
        let items: Vec<usize> = (0..m).collect();
        let flat: Vec<Vec<usize>> =
            ranges.iter().map(|rs| rs.iter().flat_map(|r| r.clone()).collect()).collect();
        prop_assert_eq!(subsamples(&items, &[]), flat);
    }

    #[test]
    fn longer_samples_extend_shorter_ones(seed: u64, short in 1usize..50, extra in 0usize..50) {
        let mut rng = rng_from_seed(seed);
        let mu = random_distribution(&mut rng, 4);
        let a = draw_quantum_sample(&mu, short, &mut rng_from_seed(seed ^ 1)).unwrap();
        let b = draw_quantum_sample(&mu, short + extra, &mut rng_from_seed(seed ^ 1)).unwrap();
        prop_assert_eq!(a.items(), &b.items()[..short]);
    }

    #[test]
    fn excess_tracks_hamming_distance(seed: u64, d in 1usize..=5, epsilon in 0.0f64..0.12) {
        let mut rng = rng_from_seed(seed);
        let labels = LabelPair::orthogonal();
        prop_assume!(epsilon < labels.trace_distance() / 8.0);
        let a: Vec<u8> = (0..d).map(|_| rng.random_range(0..2)).collect();
        let b: Vec<u8> = (0..d).map(|_| rng.random_range(0..2)).collect();
        let shattered: Vec<usize> = (0..d).collect();
        let mu = agnostic_hard_family(&shattered, &a, epsilon, &labels).unwrap();
        let fa = Concept::new(a.clone()).unwrap();
        let fb = Concept::new(b.clone()).unwrap();
        let gap = true_risk(&fb, &mu, &labels) - true_risk(&fa, &mu, &labels);
        let expected = hamming_distance(&a, &b).unwrap() as f64 * 4.0 * epsilon / d as f64;
        prop_assert!((gap - expected).abs() < 1e-12);
    }

    #[test]
    fn copies_needed_shrinks_with_delta(f in 0.01f64..0.999, d1 in 0.001f64..0.5, d2 in 0.001f64..0.5) {
        let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        prop_assert!(copies_needed(f, hi) <= copies_needed(f, lo) + 1e-9);
    }

    #[test]
    fn mutual_information_is_bounded(seed: u64, d in 1usize..=4, scale in 0.0f64..0.99) {
        let mut rng = rng_from_seed(seed);
        let labels = random_labels(&mut rng, 2, true);
        let epsilon = scale * labels.trace_distance() / 8.0;
        let info = mutual_info_single_example(d, epsilon, &labels).unwrap();
        prop_assert!(info.exact_bits >= -1e-12);
        prop_assert!(info.exact_bits <= d as f64 + 1e-12);
    }

    #[test]
    fn loss_class_contraction_holds(seed: u64, n in 1usize..=5, size in 1usize..=8, m in 1usize..=8,
                                    eta0 in 0.0f64..0.4, eta1 in 0.0f64..0.4) {
        let mut rng = rng_from_seed(seed);
        let class = random_class(&mut rng, n, size);
        let sample: Vec<(usize, u8)> = (0..m).map(|_| (rng.random_range(0..n), rng.random_range(0..2))).collect();
        let noise = NoisePair::new(eta0, eta1).unwrap();
        let check = loss_class_contraction(&class, &sample, noise, RademacherMode::Exact).unwrap();
        prop_assert!(check.holds(1e-12));
    }

    #[test]
    fn monte_carlo_rademacher_ignores_threads(seed: u64, rows in 1usize..6, cols in 1usize..30) {
        let mut rng = rng_from_seed(seed);
        let vectors: Vec<Vec<f64>> = (0..rows).map(|_| (0..cols).map(|_| rng.random()).collect()).collect();
        let mode = RademacherMode::MonteCarlo { samples: 500, seed };
        let serial = rademacher_of_vectors(&vectors, mode, Execution::Serial).unwrap();
        let parallel = rademacher_of_vectors(&vectors, mode, Execution::Parallel).unwrap();
        prop_assert_eq!(serial.to_bits(), parallel.to_bits());
    }

    #[test]
    fn complex_literals_round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
        let z = C64::new(re, im);
        prop_assert_eq!(parse_complex(&format_complex(z)).unwrap(), z);
    }

    #[test]
    fn csv_records_round_trip(rows in prop::collection::vec((1usize..10_000, 0usize..500, any::<u64>(), 0.0f64..1.0, 0.0f64..1e4), 1..20)) {
        let records: Vec<TrialRecord> = rows
            .into_iter()
            .map(|(m, trial, seed, excess_risk, elapsed_ms)| TrialRecord { m, trial, seed, excess_risk, elapsed_ms })
            .collect();
        let mut buf = Vec::new();
        write_records(&records, &mut buf).unwrap();
        prop_assert_eq!(read_records(&buf[..]).unwrap(), records);
    }
}
