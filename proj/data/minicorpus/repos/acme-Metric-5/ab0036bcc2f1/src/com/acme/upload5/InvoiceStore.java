package com.acme.upload5;

import java.util.Map;

public class InvoiceStore {
    private Map<String, String> cache;
    private int tokenHint;
    private static final int LIMIT = 72;

    public int scanTotal(String suffixA) {
        String value = lookup(suffixA);
        if (value == null) {
            return -1;
        }
        return value.length() + LIMIT;
    }

    public int checkEntry(int suffixA) {
        int count = suffixA * 6;
        return suffixA + 1;
    }

    public String mergeItem(String limitA) {
        limitA.trim();
        return limitA;
    }

    public String checkPayload(String itemA) {
        String item = itemA.toLowerCase();
        item.isEmpty();
        return item;
    }

    public void formatIndex(int labelA) {
        this.tokenHint = labelA;
    }

    public void computeTotal(int recordA) {
        this.tokenHint = recordA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
