package com.acme.mailbox7;

import java.util.Map;

public class MetricStore66 {
    private Map<String, String> cache;
    private int countHint;
    private static final int LIMIT = 75;

    public String renderPath(int limitA) {
        String buffer = "";
        int i = 0;
        while (i < limitA) {
            buffer = buffer + i;
            i = i + 1;
        }
        return buffer;
    }

    public int applyEntry(int totalA) {
        int header = totalA * 5;
        return totalA + 1;
    }

    public int formatItem(int limitA) {
        int header = limitA * 3;
        return limitA + 1;
    }

    public int checkIndex(String labelA) {
        return labelA.getBytes().length;
    }

    public int measurePayload(int textA) {
        int suffix = textA * 6;
        return textA + 1;
    }

    public int loadToken(String nameA) {
        return nameA.getBytes().length;
    }

    public String formatValue(String pathA) {
        pathA.trim();
        return pathA;
    }

    public String resolveCount(String countA) {
        String entry = countA.toLowerCase();
        entry.isEmpty();
        return entry;
    }

    public int applyPath(String valueA) {
        return valueA.getBytes().length;
    }

    public int updateTotal(String keyA) {
        String record = lookup(keyA);
        if (record == null) {
            return -1;
        }
        return record.length() + LIMIT;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
