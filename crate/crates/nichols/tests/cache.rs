use std::fs;

use nichols::cache::{Source, TowerCache};
use nichols_core::nichols::Tower;
use nichols_core::rootsys::RootSystem;

fn a2() -> RootSystem {
    RootSystem::from_label("A2").unwrap()
}

#[test]
fn cold_then_warm() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TowerCache::new(dir.path());
    let (cold, s) = cache.build(a2(), 8).unwrap();
    assert!(s.sources.iter().all(|(_, src)| *src == Source::Computed));
    let (warm, s) = cache.build(a2(), 8).unwrap();
    assert_eq!(s.hits(), 5);
    assert_eq!(cold.degrees(), warm.degrees());
    assert_eq!(warm.degrees(), Tower::build(a2(), 8).degrees());
}

#[test]
fn corrupt_entries_are_replaced() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TowerCache::new(dir.path());
    cache.build(a2(), 8).unwrap();
    let target = cache.path(&a2(), 3);
    fs::write(&target, "nichols-tower-cache 1\ngarbage\n").unwrap();
    let (t, s) = cache.build(a2(), 8).unwrap();
    assert!(matches!(s.sources[2], (3, Source::Replaced(_))));
    assert_eq!(t.dims(), [1, 3, 4, 3, 1, 0]);
    assert!(cache.load(&a2(), 3).is_ok(), "rewritten after recomputation");
}

#[test]
fn entries_for_another_system_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TowerCache::new(dir.path());
    cache.build(RootSystem::from_label("B2").unwrap(), 3).unwrap();
    let b2_file = cache.path(&RootSystem::from_label("B2").unwrap(), 2);
    let c2 = RootSystem::from_label("C2").unwrap();
    fs::create_dir_all(cache.path(&c2, 2).parent().unwrap()).unwrap();
    fs::copy(&b2_file, cache.path(&c2, 2)).unwrap();
    assert!(cache.load(&c2, 2).is_err());
    let (t, s) = cache.build(c2.clone(), 3).unwrap();
    assert!(matches!(s.sources[1], (2, Source::Replaced(_))));
    assert_eq!(t.degrees(), Tower::build(c2, 3).degrees());
}

#[test]
fn inspect_clear_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cache = TowerCache::new(dir.path().join("missing"));
    assert!(cache.inspect().unwrap().is_empty());
    cache.build(a2(), 8).unwrap();
    assert_eq!(cache.inspect().unwrap().len(), 5);
    assert!(cache.verify(&a2(), None).unwrap().iter().all(|(_, v)| v.is_ok()));
    assert_eq!(cache.verify(&a2(), Some(2)).unwrap().len(), 1);
    assert_eq!(cache.clear().unwrap(), 5);
    assert!(cache.entries().unwrap().is_empty());
}
