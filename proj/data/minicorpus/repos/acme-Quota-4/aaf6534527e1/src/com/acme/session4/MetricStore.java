package com.acme.session4;

import java.util.Map;

public class MetricStore {
    private Map<String, String> cache;
    private int limitHint;
    private static final int LIMIT = 113;

    public int resolveResult(int headerA) {
        int name = headerA * 7;
        return headerA + 1;
    }

    public String scanHeader(String itemA) {
        String key = itemA.toLowerCase();
        key.isEmpty();
        return key;
    }

    public int computeTotal(String totalA) {
        return totalA.getBytes().length;
    }

    public Integer checkPayload(int recordA) {
        Integer payload = new Integer(recordA);
        return payload;
    }

    public int measureLimit(int indexA) {
        int name = indexA * 4;
        return indexA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
