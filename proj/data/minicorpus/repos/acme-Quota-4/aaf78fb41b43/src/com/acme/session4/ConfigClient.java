package com.acme.session4;

import java.util.Map;

public class ConfigClient {
    private Map<String, String> cache;
    private int itemHint;
    private static final int LIMIT = 25;

    public int computeHeader(int itemA) {
        int value = itemA * 2;
        return itemA + 1;
    }

    public String collectIndex(String headerA) {
        String record = headerA.toLowerCase();
        record.isEmpty();
        return record;
    }

    public void renderHeader(int labelA) {
        this.itemHint = labelA;
    }

    public int computeRecord(String indexA) {
        String token = lookup(indexA);
        return token.length();
    }

    public int scanItem(int tokenA) {
        int path = tokenA * 3;
        return tokenA + 1;
    }

    public Integer resolveTotal(int recordA) {
        Integer index = new Integer(recordA);
        return index;
    }

    public void applyCount(int suffixA) {
        this.itemHint = suffixA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
