//! Normal tail against 50-digit reference values (mpmath `erfc`, frozen).

use rademacher_tails::gauss::{ln_tail, std_normal_tail};

const REFERENCE: &[(f64, f64)] = &[
    (-6_f64, 0.9999999990134123549623019),
    (-3.5_f64, 0.9997673709209644749636501),
    (-1.25_f64, 0.8943502263331447423112272),
    (-0.5_f64, 0.6914624612740131036377046),
    (0.001_f64, 0.499601057786088937407105),
    (0.1_f64, 0.4601721627229710163310661),
    (0.25_f64, 0.4012936743170762757591462),
    (0.5_f64, 0.3085375387259868963622954),
    (0.75_f64, 0.2266273523768681993270622),
    (1_f64, 0.1586552539314570514147675),
    (1.25_f64, 0.1056497736668552576887728),
    (1.5_f64, 0.06680720126885806600449404),
    (1.75_f64, 0.04005915686381709041875735),
    (2_f64, 0.02275013194817920720028264),
    (2.25_f64, 0.01222447265504470315262393),
    (2.4_f64, 0.008197535924596131433420793),
    (2.5_f64, 0.006209665325776135166978105),
    (2.6_f64, 0.004661188023718749044583394),
    (2.75_f64, 0.002979763235054556754294247),
    (3_f64, 0.001349898031630094526651815),
    (3.25_f64, 0.0005770250423907670429169193),
    (3.5_f64, 0.0002326290790355250363499259),
    (4_f64, 0.00003167124183311992125377076),
    (5_f64, 0.0000002866515718791939116737523),
    (6_f64, 9.865876450376981407008641e-10),
    (7.5_f64, 3.190891672910896227767288e-14),
    (10_f64, 7.619853024160526065973343e-24),
    (12.5_f64, 3.732564298877713377225836e-36),
    (15_f64, 3.67096619931275088578609e-51),
    (20_f64, 2.753624118606233695075623e-89),
    (25_f64, 3.056696706382560916402749e-138),
    (30_f64, 4.906713927148187059533809e-198),
    (35_f64, 1.124910706472406243979243e-268),
    (37_f64, 5.725571222524576822683193e-300),
];

#[test]
fn tail_relative_error_below_1e13() {
    for &(x, expect) in REFERENCE {
        let got = std_normal_tail(x).unwrap();
        let rel = ((got - expect) / expect).abs();
        assert!(rel <= 1e-13, "x = {x}: got {got:e}, want {expect:e}, rel {rel:e}");
    }
}

#[test]
fn log_tail_relative_error() {
    for &(x, expect) in REFERENCE {
        let got = ln_tail(x);
        let want = expect.ln();
        assert!((got - want).abs() <= 1e-13 * want.abs().max(1.0), "x = {x}");
    }
}

#[test]
fn sqrt2_and_mills_examples() {
    let v = std_normal_tail(2f64.sqrt()).unwrap();
    // 0.07864960352514257...
    assert!((v - 0.078_649_603_525_142_57).abs() < 1e-16);
    let t10 = std_normal_tail(10.0).unwrap();
    let ratio = t10 * 10.0 / rademacher_tails::gauss::pdf(10.0);
    assert!((0.9890..=0.9910).contains(&ratio), "{ratio}");
}
