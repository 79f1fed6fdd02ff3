use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hausdiv_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    hd_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = hd_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

const CONICS: &str = r#"{"families":[{"m":"t","p":["1","0","0"],"mult":2}]}"#;

#[test]
fn poly_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(hd_poly_parse(cstr("(x + y)^2 - 2*x*y").as_ptr(), &mut p), HdStatus::Ok);
        assert_eq!(hd_poly_degree(p), 2);
        let mut s = ptr::null_mut();
        assert_eq!(hd_poly_to_string(p, &mut s), HdStatus::Ok);
        assert_eq!(take(s), "x^2 + y^2");
        hd_poly_free(p);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(hd_poly_parse(cstr("x +* y").as_ptr(), &mut p), HdStatus::Parse);
        assert!(p.is_null());
        assert!(last_error().starts_with("Parse"));
        assert_eq!(hd_poly_parse(ptr::null(), &mut p), HdStatus::NullPointer);
        assert_eq!(hd_poly_degree(ptr::null()), -1);
        assert_eq!(hd_linsys_dim(ptr::null()), -2);

        let mut d = ptr::null_mut();
        assert_eq!(hd_divisor_from_json(cstr("{").as_ptr(), &mut d), HdStatus::InvalidInput);

        // A successful call clears the previous message.
        assert_eq!(hd_poly_parse(cstr("x").as_ptr(), &mut p), HdStatus::Ok);
        assert!(hd_last_error_message().is_null());
        hd_poly_free(p);
        hd_poly_free(ptr::null_mut());
        hd_string_free(ptr::null_mut());
    }
}

#[test]
fn conics_through_a_double_point() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(hd_divisor_from_json(cstr(CONICS).as_ptr(), &mut d), HdStatus::Ok);
        let mut l = ptr::null_mut();
        assert_eq!(hd_linsys_compute(2, d, &mut l), HdStatus::Ok);
        // Conics singular at (1:0:0) have no x terms: span of y^2, yz, z^2.
        assert_eq!(hd_linsys_dim(l), 2);
        let mut h = ptr::null_mut();
        assert_eq!(hd_linsys_defining_poly(l, &mut h), HdStatus::Ok);
        let mut s = ptr::null_mut();
        hd_poly_to_string(h, &mut s);
        assert!(!take(s).contains('x'));
        let mut j = ptr::null_mut();
        assert_eq!(hd_linsys_to_json(l, &mut j), HdStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(j)).unwrap();
        assert_eq!(v["dim"], 2);
        hd_poly_free(h);
        hd_linsys_free(l);

        // Lines cannot be singular anywhere.
        assert_eq!(hd_linsys_compute(1, d, &mut l), HdStatus::EmptySystem);
        hd_divisor_free(d);
    }
}

#[test]
fn cusp_parametrization_by_lines() {
    unsafe {
        let mut f = ptr::null_mut();
        hd_poly_parse(cstr("y^2*z - x^3").as_ptr(), &mut f);
        let mut out = ptr::null_mut();
        let st = hd_param_by_lines(f, cstr("0").as_ptr(), cstr("0").as_ptr(), HdPencil::Slope, &mut out);
        assert_eq!(st, HdStatus::Ok, "{}", last_error());
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["verified"], true);
        hd_poly_free(f);
    }
}

#[test]
fn distance_between_concentric_circles() {
    unsafe {
        let (mut f, mut g) = (ptr::null_mut(), ptr::null_mut());
        hd_poly_parse(cstr("x^2 + y^2 - 1").as_ptr(), &mut f);
        hd_poly_parse(cstr("x^2 + y^2 - 4").as_ptr(), &mut g);
        let mut d = 0.0;
        assert_eq!(hd_hausdorff_estimate(f, g, -3.0, 3.0, -3.0, 3.0, 100, &mut d), HdStatus::Ok);
        assert!((d - 1.0).abs() < 1e-2, "{d}");
        assert_eq!(hd_hausdorff_estimate(f, g, 1.0, -1.0, -3.0, 3.0, 100, &mut d), HdStatus::InvalidInput);
        hd_poly_free(f);
        hd_poly_free(g);
    }
}

fn compiler() -> Option<String> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
        .map(String::from)
}

#[test]
fn header_compiles_and_links_from_c() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("hd_smoke.c");
    std::fs::write(
        &src,
        r#"#include "hausdiv.h"
#include <stdio.h>
int main(void) {
    HdPoly *p = NULL;
    if (hd_poly_parse("x^2 + y^2 - z^2", &p) != HD_STATUS_OK) return 1;
    if (hd_poly_degree(p) != 2) return 2;
    char *s = NULL;
    hd_poly_to_string(p, &s);
    printf("%s\n", s);
    hd_string_free(s);
    hd_poly_free(p);
    if (hd_poly_parse("x +", &p) != HD_STATUS_PARSE) return 3;
    return hd_last_error_message() == NULL ? 4 : 0;
}
"#,
    )
    .unwrap();
    let include = root.join("include");
    let syntax = Command::new(&cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .status()
        .unwrap();
    assert!(syntax.success(), "header does not compile");

    // The static library sits next to the test binary's deps directory.
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libhausdiv_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; link step skipped", lib.display());
        return;
    }
    let exe = tmp.join("hd_smoke");
    let link = Command::new(&cc)
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(link.success(), "link failed");
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "x^2 + y^2 - z^2");
}
