use boolspec::format::{
    parse_spectrum_csv, parse_truth_table, write_spectrum_csv, write_truth_table,
};
use boolspec_core::fourier::{inverse_transform, transform};
use boolspec_core::{ProductDistribution, Sign, TruthTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn all_three_input_tables() {
    for bits in 0..256u64 {
        let tt = TruthTable::from_bits(3, bits).unwrap();
        let mut buf = Vec::new();
        write_truth_table(&tt, &mut buf).unwrap();
        assert_eq!(
            parse_truth_table(std::str::from_utf8(&buf).unwrap()).unwrap(),
            tt
        );
    }
}

#[test]
fn spectrum_file_inverts_to_table() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [1, 4, 7] {
        let tt = TruthTable::from_fn(n, |_| Sign::from_bit(rng.gen())).unwrap();
        let mu: Vec<f64> = (0..n).map(|_| rng.gen_range(-0.9..0.9)).collect();
        for d in [
            ProductDistribution::uniform(n),
            ProductDistribution::new(mu).unwrap(),
        ] {
            let mut buf = Vec::new();
            write_spectrum_csv(&transform(&tt, &d).unwrap(), &mut buf).unwrap();
            let s = parse_spectrum_csv(std::str::from_utf8(&buf).unwrap()).unwrap();
            assert_eq!(inverse_transform(&s, &d).unwrap(), tt);
        }
    }
}
