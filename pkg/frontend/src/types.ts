/** Server payload shapes, mirrored from the walkthrough API. */

export interface TreeSummary {
    id: string;
    name: string;
    version: string;
    node_count: number;
    leaf_count: number;
}

export interface BranchView {
    index: number;
    answer: string;
}

export interface QuestionView {
    node_id: string;
    text: string;
    branches: BranchView[];
}

export interface LeafView {
    leaf_id: string;
    verdict: string;
    resolved: string[];
    statement: string;
    refs: string[];
}

export interface BreadcrumbEntry {
    question: string;
    answer: string;
}

export interface FindingView {
    leaf_id: string;
    verdict: string;
    statement: string;
    note: string | null;
}

export interface SessionView {
    session_id: string;
    tree_id: string;
    filter: string[] | null;
    at_leaf: boolean;
    question: QuestionView | null;
    leaf: LeafView | null;
    breadcrumb: BreadcrumbEntry[];
    findings: FindingView[];
    can_step_back: boolean;
    created_at: string;
    updated_at: string;
}

export interface DatasetItem {
    id: string;
    source_set: string;
    text: string;
    kb_leaf_ref?: string;
    note?: string;
}

export interface DatasetDocument {
    name: string;
    source_set: string;
    subject_paper: string;
    items: DatasetItem[];
}
