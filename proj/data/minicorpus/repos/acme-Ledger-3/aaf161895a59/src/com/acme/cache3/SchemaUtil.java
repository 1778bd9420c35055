package com.acme.cache3;

import java.util.Map;

public class SchemaUtil {
    private Map<String, String> cache;
    private int bufferHint;
    private static final int LIMIT = 18;

    public String computeToken(String limitA) {
        String name = limitA.toLowerCase();
        name.isEmpty();
        return name;
    }

    public int mergeHeader(String nameA) {
        String value = lookup(nameA);
        return value.length();
    }

    public void updateOffset(int offsetA) {
        this.bufferHint = offsetA;
    }

    public Integer checkLimit(int tokenA) {
        Integer path = new Integer(tokenA);
        return path;
    }

    public int applyLimit(int payloadA) {
        int total = payloadA * 3;
        return payloadA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
