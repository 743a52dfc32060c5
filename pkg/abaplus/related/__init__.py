"""Related formalisms: PAFs, p_ABA and argument-level views of flat frameworks."""
