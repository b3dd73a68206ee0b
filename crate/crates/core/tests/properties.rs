use proptest::prelude::*;

use ramified::closure::generators;
use ramified::diagram::{Diagram, Kind};
use ramified::normal_form::validate::NfFamily;
use ramified::partition::SetPartition;
use ramified::ramified::RamifiedPartition;
use ramified::render;
use ramified::tag::Tag;
use ramified::word::{eval, Value, Word};

fn partition(m: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0..m.max(1), m).prop_map(|raw| SetPartition::from_raw_labels(&raw))
}

fn diagrams(count: usize) -> impl Strategy<Value = (usize, Vec<Diagram>)> {
    (1usize..=5).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(
                partition(2 * n).prop_map(move |p| Diagram::new(n, Kind::Full, p).unwrap()),
                count,
            ),
        )
    })
}

/// A ramified partition: any shape, ties a random coarsening of it.
fn ramified(n: usize) -> impl Strategy<Value = RamifiedPartition> {
    (partition(2 * n), prop::collection::vec(0usize..4, 2 * n)).prop_map(move |(shape, glue)| {
        let blocks = shape.blocks();
        let mut raw = vec![0; 2 * n];
        for (k, b) in blocks.iter().enumerate() {
            let label = glue[k] % 3;
            for &e in b {
                raw[e - 1] = if k % 2 == 0 { label } else { 3 + k };
            }
        }
        let ties = SetPartition::from_raw_labels(&raw);
        let shape = Diagram::new(n, Kind::Full, shape).unwrap();
        RamifiedPartition::new(shape, ties).unwrap()
    })
}

fn ramified_triple() -> impl Strategy<Value = Vec<RamifiedPartition>> {
    (1usize..=4).prop_flat_map(|n| prop::collection::vec(ramified(n), 3))
}

/// A random word over the stated generators of `tag`.
fn generator_word(tag: Tag, n: usize) -> impl Strategy<Value = Word> {
    let gens = generators(tag, n).unwrap();
    prop::collection::vec(prop::sample::select(gens), 0..12).prop_map(|ws| Word::concat(&ws))
}

proptest! {
    #[test]
    fn concat_is_associative((_, d) in diagrams(3)) {
        let left = d[0].concat(&d[1]).unwrap().concat(&d[2]).unwrap();
        let right = d[0].concat(&d[1].concat(&d[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_and_flip((n, d) in diagrams(2)) {
        let id = Diagram::identity(n, Kind::Full);
        prop_assert_eq!(&id.concat(&d[0]).unwrap(), &d[0]);
        prop_assert_eq!(&d[0].concat(&id).unwrap(), &d[0]);
        let xy = d[0].concat(&d[1]).unwrap();
        prop_assert_eq!(xy.flip(), d[1].flip().concat(&d[0].flip()).unwrap());
        // x x* x = x
        let x = &d[0];
        prop_assert_eq!(&x.concat(&x.flip()).unwrap().concat(x).unwrap(), x);
    }

    #[test]
    fn ramified_product_is_associative_and_refines(a in ramified_triple()) {
        let left = a[0].product(&a[1]).unwrap().product(&a[2]).unwrap();
        let right = a[0].product(&a[1].product(&a[2]).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert!(left.shape().partition().refines(left.ties()).unwrap());
    }

    #[test]
    fn literals_round_trip(a in ramified_triple(), (_, d) in diagrams(1), p in partition(7)) {
        for v in [Value::Ramified(a[0].clone()), Value::Diagram(d[0].clone()), Value::Partition(p)] {
            let back: Value = v.to_string().parse().unwrap();
            prop_assert_eq!(&back, &v);
            prop_assert_eq!(render::text(&back), render::text(&v));
        }
    }

    #[test]
    fn words_over_generators_stay_in_the_monoid(
        (tag, n, w) in prop::sample::select(vec![Tag::RIS, Tag::RI, Tag::PRI, Tag::PRJ, Tag::PP])
            .prop_flat_map(|tag| (2usize..=4).prop_flat_map(move |n| {
                (Just(tag), Just(n), generator_word(tag, n))
            }))
    ) {
        let x = eval(&w, n, tag.context()).unwrap();
        prop_assert!(tag.contains(&x), "{} gives {}", w, x);
    }

    #[test]
    fn normal_forms_evaluate_back(
        (fam, n, w) in prop::sample::select(vec![
            (NfFamily::RIS, Tag::RIS), (NfFamily::RI, Tag::RI),
            (NfFamily::PRI, Tag::PRI), (NfFamily::PRJ, Tag::PRJ),
        ])
        .prop_flat_map(|(fam, tag)| (2usize..=5).prop_flat_map(move |n| {
            (Just(fam), Just(n), generator_word(tag, n))
        }))
    ) {
        let x = eval(&w, n, ramified::word::Context::Ramified).unwrap();
        let nf = fam.normal_form(&x).unwrap().word();
        prop_assert_eq!(eval(&nf, n, ramified::word::Context::Ramified).unwrap(), x);
    }
}
