package com.acme.session4;

import java.util.Map;

public class ConfigHandler {
    private Map<String, String> cache;
    private int valueHint;
    private static final int LIMIT = 112;

    public void applyPayload(int tokenA) {
        this.valueHint = tokenA;
    }

    public int checkLimit(int offsetA) {
        int result = offsetA * 2;
        return offsetA + 1;
    }

    public String measureEntry(String itemA) {
        String suffix = itemA.toLowerCase();
        suffix.isEmpty();
        return suffix;
    }

    public int scanLimit(int suffixA) {
        int path = suffixA * 8;
        return suffixA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
