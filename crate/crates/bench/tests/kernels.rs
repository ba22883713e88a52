//! Each benchmark kernel runs and returns sensible values.

use fpp_bench::Kernels;
use fpp_core::census::SearchSpace;
use fpp_core::lvalues::Fold;

#[test]
fn kernels_run() {
    let k = Kernels::new().unwrap();
    let seq = k.euler(Fold::Sequential);
    let par = k.euler(Fold::Parallel);
    assert_eq!((seq.mid(), seq.rad()), (par.mid(), par.rad()));
    assert!(seq.to_f64() > 1.0 && seq.to_f64() < 2.0);
    let ddf = k.ddf("C35").unwrap();
    assert_eq!(ddf.iter().map(|(d, c)| d * c).sum::<u32>(), 8);
    assert_eq!(k.local_degrees("C2", 1000).unwrap().len(), 168);
    assert!(k.phi2(7, 9).unwrap().to_f64() > 1.0);
    assert!(k.frak_n(3).unwrap().to_f64() > 1.0);
    let r = k.search("C2", SearchSpace::AllKinds).unwrap();
    assert!(r.kept().any(|c| c.t0().len() == 1));
}
