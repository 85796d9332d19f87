use std::ffi::{c_char, c_int, CStr, CString};
use std::ptr;

use weightcalc_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 512];
    let n = unsafe { wc_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(n > 0);
    unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned()
}

#[test]
fn factorial_round_trip_through_handles() {
    let mut seq = ptr::null_mut();
    assert_eq!(unsafe { wc_sequence_gevrey(1.0, 64, &mut seq) }, WcStatus::Ok);
    assert_eq!(unsafe { wc_sequence_truncation(seq) }, 64);
    let mut v = 0.0;
    assert_eq!(unsafe { wc_sequence_log_m(seq, 4, &mut v) }, WcStatus::Ok);
    assert!((v - 24f64.ln()).abs() < 1e-12);
    assert_eq!(unsafe { wc_sequence_log_m(seq, 65, &mut v) }, WcStatus::Truncation);
    assert!(last_error().contains("65"));

    let mut g = 0usize;
    assert_eq!(unsafe { wc_sequence_growth_index(seq, 8, &mut g) }, WcStatus::Ok);
    assert_eq!(g, 1);
    let mut mg: c_int = 0;
    assert_eq!(unsafe { wc_sequence_has_mg(seq, &mut mg) }, WcStatus::Ok);
    assert_eq!(mg, 1);

    let mut w = ptr::null_mut();
    assert_eq!(unsafe { wc_omega_of(seq, &mut w) }, WcStatus::Ok);
    let mut om = 0.0;
    // omega_{p!}(t) at t = 3 is max_p log(3^p / p!) = log(9/2).
    assert_eq!(unsafe { wc_omega_eval(w, 3.0, &mut om) }, WcStatus::Ok);
    assert!((om - 4.5f64.ln()).abs() < 1e-12);
    unsafe {
        wc_omega_free(w);
        wc_sequence_free(seq);
    }
}

#[test]
fn quotient_constructor_and_spec_parsing() {
    let log_mu: Vec<f64> = (1..=10).map(|k| (k as f64).ln()).collect();
    let mut seq = ptr::null_mut();
    assert_eq!(unsafe { wc_sequence_from_quotients(log_mu.as_ptr(), log_mu.len(), &mut seq) }, WcStatus::Ok);
    assert_eq!(unsafe { wc_sequence_truncation(seq) }, 10);
    unsafe { wc_sequence_free(seq) };

    let spec = CString::new("qgevrey:2").unwrap();
    let mut seq = ptr::null_mut();
    assert_eq!(unsafe { wc_sequence_from_spec(spec.as_ptr(), 32, &mut seq) }, WcStatus::Ok);
    assert_eq!(unsafe { wc_sequence_truncation(seq) }, 32);
    unsafe { wc_sequence_free(seq) };

    let bad = CString::new("qgevrey:1").unwrap();
    let mut seq = ptr::null_mut();
    assert_eq!(unsafe { wc_sequence_from_spec(bad.as_ptr(), 32, &mut seq) }, WcStatus::Parameter);
    assert!(seq.is_null());
}

#[test]
fn null_arguments_are_rejected() {
    assert_eq!(unsafe { wc_sequence_gevrey(1.0, 8, ptr::null_mut()) }, WcStatus::NullPointer);
    let mut g = 0usize;
    assert_eq!(unsafe { wc_sequence_growth_index(ptr::null(), 8, &mut g) }, WcStatus::NullPointer);
    assert!(last_error().contains("seq"));
    assert_eq!(unsafe { wc_sequence_truncation(ptr::null()) }, 0);
    unsafe {
        wc_sequence_free(ptr::null_mut());
        wc_omega_free(ptr::null_mut());
        wc_string_free(ptr::null_mut());
    }
}

#[test]
fn suite_runs_through_the_abi() {
    let mut seq = ptr::null_mut();
    assert_eq!(unsafe { wc_sequence_gevrey(1.0, 128, &mut seq) }, WcStatus::Ok);
    let mut json: *mut c_char = ptr::null_mut();
    let mut status: c_int = -1;
    assert_eq!(unsafe { wc_verify_all(seq, 3, &mut json, &mut status) }, WcStatus::Ok);
    assert_ne!(status, 2);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v.as_array().unwrap().len() >= 14);
    unsafe {
        wc_string_free(json);
        wc_sequence_free(seq);
    }
}

/// Compile the C smoke test against the generated header and the static library.
#[test]
fn c_program_links_against_the_header() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if std::process::Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler ({cc})");
        return;
    }
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    // The test binary lives in target/<profile>/deps; the static library one level up.
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libweightcalc_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let bin = dir.path().join("smoke");
    let out = std::process::Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = std::process::Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok 0.1.0"));
}
