/** Server payload shapes, mirrored from the walkthrough API. */
export {};
