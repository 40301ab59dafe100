mod common;

use common::UPTO7;
use serde_json::Value;
use std::io::Cursor;
use toughham::harness::*;
use toughham::Rational;

fn corpus_stream() -> GraphStream {
    read_graph6(Cursor::new(UPTO7))
}

fn descriptor() -> CorpusDescriptor {
    CorpusDescriptor { sources: vec!["upto7".into()], ..CorpusDescriptor::default() }
}

fn run(c: Campaign) -> CampaignReport {
    run_campaign(&c, corpus_stream(), descriptor(), &RunOptions::default(), None).unwrap()
}

/// JSONL with the timing fields removed.
fn strip_timings(jsonl: &[u8]) -> Vec<Value> {
    fn strip(v: &mut Value) {
        match v {
            Value::Object(m) => {
                m.remove("timings_ms");
                m.remove("wall_clock_ms");
                m.values_mut().for_each(strip);
            }
            Value::Array(a) => a.iter_mut().for_each(strip),
            _ => {}
        }
    }
    std::str::from_utf8(jsonl)
        .unwrap()
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            strip(&mut v);
            v
        })
        .collect()
}

#[test]
fn statements_hold_on_corpus() {
    let r = run(Campaign::Theorem { k: 4 });
    assert_eq!((r.counts.scanned, r.counts.violations), (1253, 0));
    for k in 1..=3 {
        let r = run(Campaign::Corollary { k });
        assert_eq!(r.counts.violations, 0, "k={k}");
        assert!(r.counts.hypothesis_satisfying > 0);
        assert_eq!(r.counts.hypothesis_satisfying, r.counts.conclusion_holds);
    }
    for t in [Rational::from_integer(1), Rational::new(3, 2), Rational::from_integer(2), Rational::from_integer(3)] {
        let r = run(Campaign::Bauer { t });
        assert_eq!(r.counts.violations, 0, "t={t}");
        assert!(r.counts.hypothesis_satisfying > 0);
    }
}

#[test]
fn cross_checks_on_corpus() {
    let r = run(Campaign::CrossChecks);
    assert_eq!(r.counts.violations, 0);
    assert_eq!(r.checks.len(), 4);
    for (name, c) in &r.checks {
        assert_eq!(c.violations, 0, "{name}");
        assert!(c.hypothesis_satisfying > 0, "{name}");
    }
    assert!(r.logged["ceiling-literal-fails"] > 0);
}

#[test]
fn jsonl_is_deterministic() {
    let families = ["complete:3..12", "gnp:5..12:1/2,9/10:300"];
    let mut outputs = Vec::new();
    for jobs in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().unwrap();
        let mut buf = Vec::new();
        let streams: Vec<GraphStream> = families.iter().map(|f| Family::parse(f, 11).unwrap().stream()).collect();
        let opts = RunOptions { chunk: 37, ..RunOptions::default() };
        pool.install(|| {
            run_campaign(
                &Campaign::Conjecture { k: 4 },
                Box::new(streams.into_iter().flatten()),
                descriptor(),
                &opts,
                Some(&mut buf),
            )
        })
        .unwrap();
        outputs.push(strip_timings(&buf));
    }
    assert_eq!(outputs[0], outputs[1]);
    let lines = &outputs[0];
    assert_eq!(lines.len(), 10 + 300 + 1);
    for (i, v) in lines[..lines.len() - 1].iter().enumerate() {
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["record"], "graph");
        assert_eq!(v["index"], i as u64);
    }
    assert_eq!(lines.last().unwrap()["record"], "summary");
}

#[test]
fn hunt_is_deterministic() {
    let sampler = Sampler { n_min: 9, n_max: 14, ps: vec![Rational::new(4, 5), Rational::new(9, 10)], seed: 7 };
    let run = || {
        let mut buf = Vec::new();
        let r = hunt_conjecture(&sampler, 4, 200, &RunOptions::default(), Some(&mut buf)).unwrap();
        (r, strip_timings(&buf))
    };
    let (a, la) = run();
    let (b, lb) = run();
    assert_eq!(la, lb);
    assert_eq!(a.counts, b.counts);
    assert_eq!(a.status, RunStatus::BudgetExhausted);
    assert_eq!(a.counts.violations, 0);

    let r = hunt_conjecture(&sampler, 4, 0, &RunOptions::default(), None).unwrap();
    assert_eq!((r.counts.scanned, r.status), (0, RunStatus::BudgetExhausted));
}

#[test]
fn malformed_corpus_line_aborts() {
    let text = "Bw\nCF\nnot graph6\n";
    let err = run_campaign(
        &Campaign::CrossChecks,
        read_graph6(Cursor::new(text)),
        descriptor(),
        &RunOptions::default(),
        None,
    )
    .unwrap_err();
    assert!(err.to_string().contains("line 3"), "{err}");
}

#[test]
fn profiles_serialize_exact_ratios() {
    let p = profile(&toughham::graph::petersen(), &[4], &toughham::Caps::default()).unwrap();
    let v = serde_json::to_value(&p).unwrap();
    assert_eq!(v["toughness"], "4/3");
    assert_eq!(v["free"]["4"], true);
}
