use sylvkit_core::congruence::MonoidTag;
use sylvkit_core::deduce::{basis_for, default_budget, derive, derive_guided, verify_derivation};
use sylvkit_core::evalsearch::enumerate_identities;
use sylvkit_core::idcheck::check_id;
use sylvkit_core::word::Identity;

fn suffix(a: &Identity) -> usize {
    a.lhs.iter().rev().zip(a.rhs.iter().rev()).take_while(|(x, y)| x == y).count()
}

fn derive_all(tag: MonoidTag, n: usize, max_len: usize) {
    for id in enumerate_identities(n, max_len) {
        if !check_id(tag, &id).is_satisfied() {
            assert!(derive(tag, &id, 64).is_err());
            continue;
        }
        let d = derive(tag, &id, default_budget(tag, id.len())).unwrap_or_else(|e| panic!("{tag} {id}: {e}"));
        assert!(verify_derivation(tag, &id, &d), "{tag} {id}");
        for pair in d.words().unwrap().windows(2) {
            let step = Identity::new(pair[0].clone(), pair[1].clone());
            assert!(check_id(tag, &step).is_satisfied(), "{tag} {id}: unsound step {step}");
        }
        assert!(d.steps.iter().all(|s| basis_for(tag).contains(&s.basis)));
    }
}

#[test]
fn sylv_small() {
    for n in 2..=3 {
        derive_all(MonoidTag::Sylv, n, 6);
    }
}

#[test]
fn sylvh_small() {
    for n in 2..=3 {
        derive_all(MonoidTag::Sylvh, n, 6);
    }
}

#[test]
fn baxt_small() {
    derive_all(MonoidTag::Baxt, 2, 7);
}

#[test]
fn guided_suffix_grows() {
    for id in enumerate_identities(3, 6) {
        if !check_id(MonoidTag::Sylv, &id).is_satisfied() {
            continue;
        }
        let g = derive_guided(MonoidTag::Sylv, &id, 64).unwrap();
        assert!(!g.used_fallback, "{id}");
        let words = g.derivation.words().unwrap();
        let mut last = suffix(&id);
        for &b in &g.macro_boundaries {
            let now = suffix(&Identity::new(words[b].clone(), id.rhs.clone()));
            assert!(now > last, "{id}");
            last = now;
        }
    }
}
