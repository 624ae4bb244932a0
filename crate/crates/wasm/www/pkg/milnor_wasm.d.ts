/* tslint:disable */
/* eslint-disable */

/**
 * Plane-curve branch in the `e:c,…` term format, with an optional implicit
 * curve `meet` (empty string for none).
 */
export function curve_report(terms: string, meet: string): string;

/**
 * Report for the link of `x_0^a_0 + … + x_n^a_n`; `exponents` is a
 * space- or comma-separated list.
 */
export function link_report(exponents: string, max_degree: number): string;

/**
 * Plumbing graph given by name (`E8`, `A<k>`) or as graph-file text.
 */
export function plumb_report(graph: string): string;

/**
 * Monodromy eigenvalues as flat `[numerator, denominator, multiplicity, …]`
 * triples; the eigenvalue is `exp(2πi · numerator/denominator)`.
 */
export function spectrum_points(exponents: string): Uint32Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly curve_report: (a: number, b: number, c: number, d: number) => [number, number];
    readonly link_report: (a: number, b: number, c: number) => [number, number];
    readonly plumb_report: (a: number, b: number) => [number, number];
    readonly spectrum_points: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
